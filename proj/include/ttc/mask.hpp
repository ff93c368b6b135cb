#pragma once

#include "ttc/tensor.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace ttc {

using Index3 = std::array<std::size_t, 3>;

/// Observed index set Omega. Indices are unique and sorted
/// lexicographically by (i, j, k).
class SamplingMask {
public:
    SamplingMask() = default;
    /// Throws ParameterError on out-of-range or repeated indices. Indices
    /// need not be sorted on input.
    SamplingMask(Dims dims, std::vector<Index3> observed);

    /// Every index of `dims`.
    static SamplingMask full(Dims dims);

    const Dims& dims() const noexcept { return dims_; }
    const std::vector<Index3>& observed() const noexcept { return observed_; }
    std::size_t count() const noexcept { return observed_.size(); }
    /// |Omega| / (n1 n2 n3).
    double rate() const noexcept;
    bool is_full() const noexcept { return observed_.size() == dims_.size(); }

    bool contains(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return dense_[(k * dims_.n2 + j) * dims_.n1 + i] != 0;
    }
    /// Membership indexed by tensor storage offset.
    bool contains_offset(std::size_t offset) const noexcept { return dense_[offset] != 0; }

    friend bool operator==(const SamplingMask& a, const SamplingMask& b) noexcept {
        return a.dims_ == b.dims_ && a.observed_ == b.observed_;
    }

private:
    Dims dims_{};
    std::vector<Index3> observed_;
    std::vector<std::uint8_t> dense_;
};

/// S_Omega(A): observed entries kept, the rest zeroed.
Tensor3 sample(const SamplingMask& mask, const Tensor3& a);
/// S_{Omega^C}(A).
Tensor3 sample_complement(const SamplingMask& mask, const Tensor3& a);

}  // namespace ttc
