#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ttc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using SliceMap = Eigen::Map<Matrix>;
using ConstSliceMap = Eigen::Map<const Matrix>;

struct Dims {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;

    std::size_t size() const noexcept { return n1 * n2 * n3; }
    std::size_t slice_size() const noexcept { return n1 * n2; }
    friend bool operator==(const Dims&, const Dims&) = default;
};

std::string to_string(const Dims& d);

/// Dense complex 3-way array.
///
/// Entry (i, j, k) lives at offset (k * n2 + j) * n1 + i: each frontal slice
/// is a contiguous column-major n1 x n2 block and slices follow each other.
/// `real_hint` marks tensors that semantically hold real data; arithmetic is
/// always complex and the hint only matters when casting at the boundary.
class Tensor3 {
public:
    Tensor3() = default;
    /// Zero tensor. Throws ShapeError on a zero dimension.
    explicit Tensor3(Dims dims);
    Tensor3(std::size_t n1, std::size_t n2, std::size_t n3) : Tensor3(Dims{n1, n2, n3}) {}
    /// Adopts `data`, which must have exactly dims.size() finite entries.
    Tensor3(Dims dims, std::vector<Complex> data, bool real_hint = false);

    const Dims& dims() const noexcept { return dims_; }
    std::size_t n1() const noexcept { return dims_.n1; }
    std::size_t n2() const noexcept { return dims_.n2; }
    std::size_t n3() const noexcept { return dims_.n3; }
    std::size_t size() const noexcept { return data_.size(); }

    std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return (k * dims_.n2 + j) * dims_.n1 + i;
    }
    Complex& operator()(std::size_t i, std::size_t j, std::size_t k) noexcept {
        return data_[offset(i, j, k)];
    }
    const Complex& operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return data_[offset(i, j, k)];
    }

    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }

    SliceMap slice(std::size_t k) noexcept {
        return SliceMap(data_.data() + k * dims_.slice_size(),
                        static_cast<Eigen::Index>(dims_.n1), static_cast<Eigen::Index>(dims_.n2));
    }
    ConstSliceMap slice(std::size_t k) const noexcept {
        return ConstSliceMap(data_.data() + k * dims_.slice_size(),
                             static_cast<Eigen::Index>(dims_.n1),
                             static_cast<Eigen::Index>(dims_.n2));
    }

    /// The whole tensor as an (n1*n2) x n3 matrix whose columns are the
    /// vectorized slices; row (i + n1*j) is the tube (i, j, :).
    Eigen::Map<Matrix> unfold3() noexcept {
        return {data_.data(), static_cast<Eigen::Index>(dims_.slice_size()),
                static_cast<Eigen::Index>(dims_.n3)};
    }
    Eigen::Map<const Matrix> unfold3() const noexcept {
        return {data_.data(), static_cast<Eigen::Index>(dims_.slice_size()),
                static_cast<Eigen::Index>(dims_.n3)};
    }

    bool real_hint() const noexcept { return real_hint_; }
    /// Sets the hint. Throws ParameterError when marking a tensor real whose
    /// imaginary parts exceed 1e-12 * (||A||_F + 1).
    void set_real_hint(bool hint);

    /// Largest |Im a_ijk|.
    double max_imag() const noexcept;
    /// Copy with imaginary parts dropped and real_hint set.
    Tensor3 real_part() const;

    /// Throws if any entry is NaN/Inf or the real_hint invariant is broken.
    void validate() const;

    Tensor3& operator+=(const Tensor3& other);
    Tensor3& operator-=(const Tensor3& other);
    Tensor3& operator*=(Complex c) noexcept;
    Tensor3& operator/=(Complex c) noexcept;

    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(Tensor3 a, Complex c) { return a *= c; }
    friend Tensor3 operator*(Complex c, Tensor3 a) { return a *= c; }
    friend Tensor3 operator/(Tensor3 a, Complex c) { return a /= c; }

    /// Bitwise equality of dims and payload (real_hint ignored).
    friend bool operator==(const Tensor3& a, const Tensor3& b) noexcept;

private:
    Dims dims_{};
    std::vector<Complex> data_;
    bool real_hint_ = false;
};

}  // namespace ttc
