#include "ttc/mask.hpp"

#include "ttc/errors.hpp"

#include <algorithm>

namespace ttc {

SamplingMask::SamplingMask(Dims dims, std::vector<Index3> observed)
    : dims_(dims), observed_(std::move(observed)), dense_(dims.size(), 0) {
    if (dims.size() == 0) throw ShapeError("mask dims must be positive, got " + to_string(dims));
    std::sort(observed_.begin(), observed_.end());
    for (std::size_t n = 0; n < observed_.size(); ++n) {
        const auto& [i, j, k] = observed_[n];
        if (i >= dims.n1 || j >= dims.n2 || k >= dims.n3)
            throw ParameterError("mask index (" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ") outside " + to_string(dims));
        if (n > 0 && observed_[n - 1] == observed_[n])
            throw ParameterError("mask index (" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ") repeated");
        dense_[(k * dims.n2 + j) * dims.n1 + i] = 1;
    }
}

SamplingMask SamplingMask::full(Dims dims) {
    std::vector<Index3> all;
    all.reserve(dims.size());
    for (std::size_t i = 0; i < dims.n1; ++i)
        for (std::size_t j = 0; j < dims.n2; ++j)
            for (std::size_t k = 0; k < dims.n3; ++k) all.push_back({i, j, k});
    return SamplingMask(dims, std::move(all));
}

double SamplingMask::rate() const noexcept {
    return dims_.size() ? static_cast<double>(observed_.size()) / static_cast<double>(dims_.size())
                        : 0.0;
}

Tensor3 sample(const SamplingMask& mask, const Tensor3& a) {
    if (mask.dims() != a.dims())
        throw ShapeError("mask " + to_string(mask.dims()) + " does not match tensor " +
                         to_string(a.dims()));
    Tensor3 out(a.dims());
    auto src = a.data();
    auto dst = out.data();
    for (std::size_t n = 0; n < src.size(); ++n)
        if (mask.contains_offset(n)) dst[n] = src[n];
    if (a.real_hint()) out.set_real_hint(true);
    return out;
}

Tensor3 sample_complement(const SamplingMask& mask, const Tensor3& a) {
    if (mask.dims() != a.dims())
        throw ShapeError("mask " + to_string(mask.dims()) + " does not match tensor " +
                         to_string(a.dims()));
    Tensor3 out(a.dims());
    auto src = a.data();
    auto dst = out.data();
    for (std::size_t n = 0; n < src.size(); ++n)
        if (!mask.contains_offset(n)) dst[n] = src[n];
    if (a.real_hint()) out.set_real_hint(true);
    return out;
}

}  // namespace ttc
