#include "ttc/tensor.hpp"

#include "ttc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace ttc {

std::string to_string(const Dims& d) {
    return std::to_string(d.n1) + "x" + std::to_string(d.n2) + "x" + std::to_string(d.n3);
}

Tensor3::Tensor3(Dims dims) : dims_(dims) {
    if (dims.n1 == 0 || dims.n2 == 0 || dims.n3 == 0)
        throw ShapeError("tensor dims must be positive, got " + to_string(dims));
    data_.assign(dims.size(), Complex{});
}

Tensor3::Tensor3(Dims dims, std::vector<Complex> data, bool real_hint) : dims_(dims) {
    if (dims.n1 == 0 || dims.n2 == 0 || dims.n3 == 0)
        throw ShapeError("tensor dims must be positive, got " + to_string(dims));
    if (data.size() != dims.size())
        throw ShapeError("tensor " + to_string(dims) + " needs " + std::to_string(dims.size()) +
                         " entries, got " + std::to_string(data.size()));
    data_ = std::move(data);
    validate();
    set_real_hint(real_hint);
}

void Tensor3::set_real_hint(bool hint) {
    if (hint) {
        double limit = 1e-12 * (unfold3().norm() + 1.0);
        if (max_imag() > limit)
            throw ParameterError("real_hint set on a tensor with imaginary parts up to " +
                                 std::to_string(max_imag()));
    }
    real_hint_ = hint;
}

double Tensor3::max_imag() const noexcept {
    double m = 0;
    for (const auto& v : data_) m = std::max(m, std::abs(v.imag()));
    return m;
}

Tensor3 Tensor3::real_part() const {
    Tensor3 r = *this;
    for (auto& v : r.data_) v = Complex(v.real(), 0.0);
    r.real_hint_ = true;
    return r;
}

void Tensor3::validate() const {
    if (data_.size() != dims_.size())
        throw ShapeError("tensor payload does not match dims " + to_string(dims_));
    for (std::size_t n = 0; n < data_.size(); ++n) {
        if (!std::isfinite(data_[n].real()) || !std::isfinite(data_[n].imag()))
            throw ParameterError("non-finite tensor entry at offset " + std::to_string(n));
    }
    if (real_hint_ && max_imag() > 1e-12 * (unfold3().norm() + 1.0))
        throw ParameterError("real-hinted tensor has non-negligible imaginary parts");
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
    if (other.dims_ != dims_)
        throw ShapeError("cannot add " + to_string(other.dims_) + " to " + to_string(dims_));
    unfold3() += other.unfold3();
    real_hint_ = real_hint_ && other.real_hint_;
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
    if (other.dims_ != dims_)
        throw ShapeError("cannot subtract " + to_string(other.dims_) + " from " +
                         to_string(dims_));
    unfold3() -= other.unfold3();
    real_hint_ = real_hint_ && other.real_hint_;
    return *this;
}

Tensor3& Tensor3::operator*=(Complex c) noexcept {
    for (auto& v : data_) v *= c;
    if (c.imag() != 0) real_hint_ = false;
    return *this;
}

Tensor3& Tensor3::operator/=(Complex c) noexcept {
    for (auto& v : data_) v /= c;
    if (c.imag() != 0) real_hint_ = false;
    return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) noexcept {
    return a.dims_ == b.dims_ &&
           std::memcmp(a.data_.data(), b.data_.data(), a.data_.size() * sizeof(Complex)) == 0;
}

}  // namespace ttc
