#pragma once

#include "ttc/mask.hpp"
#include "ttc/tensor.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ttc::io {

// TNS1: "TNS1", flags (bit0 complex, bit1 real_hint), n1 n2 n3 as u64 LE,
// then f64 LE values in storage order, (re, im) interleaved when complex.
// MSK1: "MSK1", n1 n2 n3, count, then count (i, j, k) u64 LE triples,
// strictly increasing lexicographically.

inline constexpr std::uint8_t kFlagComplex = 0x1;
inline constexpr std::uint8_t kFlagRealHint = 0x2;

std::vector<std::uint8_t> encode_tensor(const Tensor3& t);
Tensor3 decode_tensor(const std::vector<std::uint8_t>& bytes);

std::vector<std::uint8_t> encode_mask(const SamplingMask& m);
SamplingMask decode_mask(const std::vector<std::uint8_t>& bytes);

Tensor3 read_tensor(const std::filesystem::path& path);
void write_tensor(const std::filesystem::path& path, const Tensor3& t);

SamplingMask read_mask(const std::filesystem::path& path);
void write_mask(const std::filesystem::path& path, const SamplingMask& m);

/// Transform matrices are tensors of dims (N3, n3, 1).
Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Matrix& m);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace ttc::io
