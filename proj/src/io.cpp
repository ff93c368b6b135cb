#include "ttc/io.hpp"

#include "ttc/errors.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>

namespace ttc::io {

namespace {

constexpr std::size_t kMagicSize = 4;
constexpr std::size_t kTensorHeader = kMagicSize + 1 + 3 * 8;
constexpr std::size_t kMaskHeader = kMagicSize + 4 * 8;

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

class Reader {
public:
    Reader(const std::vector<std::uint8_t>& bytes, const char* what) : bytes_(bytes), what_(what) {}

    std::size_t offset() const { return pos_; }
    std::size_t remaining() const { return bytes_.size() - pos_; }

    void need(std::size_t n, const char* field) const {
        if (remaining() < n)
            throw FormatError(std::string(what_) + ": truncated " + field + " at byte " +
                                  std::to_string(pos_) + " (need " + std::to_string(n) +
                                  " bytes, have " + std::to_string(remaining()) + ")",
                              pos_);
    }

    void magic(const char (&expected)[5]) {
        need(kMagicSize, "magic");
        if (std::memcmp(bytes_.data(), expected, kMagicSize) != 0)
            throw FormatError(std::string(what_) + ": bad magic at byte 0, expected '" +
                                  expected + "'",
                              0);
        pos_ += kMagicSize;
    }

    std::uint8_t u8(const char* field) {
        need(1, field);
        return bytes_[pos_++];
    }

    std::uint64_t u64(const char* field) {
        need(8, field);
        std::uint64_t v = 0;
        for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(bytes_[pos_ + b]) << (8 * b);
        pos_ += 8;
        return v;
    }

    double f64() { return std::bit_cast<double>(u64("payload")); }

private:
    const std::vector<std::uint8_t>& bytes_;
    const char* what_;
    std::size_t pos_ = 0;
};

Dims read_dims(Reader& r, const char* what) {
    const std::size_t at = r.offset();
    Dims d{r.u64("n1"), r.u64("n2"), r.u64("n3")};
    if (d.n1 == 0 || d.n2 == 0 || d.n3 == 0)
        throw FormatError(std::string(what) + ": zero dimension in header at byte " +
                              std::to_string(at),
                          at);
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max() / 16;
    if (d.n1 > kMax / d.n2 || d.n1 * d.n2 > kMax / d.n3)
        throw FormatError(std::string(what) + ": dims overflow at byte " + std::to_string(at),
                          at);
    return d;
}

}  // namespace

std::vector<std::uint8_t> encode_tensor(const Tensor3& t) {
    bool complex = false;
    for (const auto& v : t.data())
        if (std::bit_cast<std::uint64_t>(v.imag()) != 0) {
            complex = true;
            break;
        }
    std::vector<std::uint8_t> out{'T', 'N', 'S', '1'};
    out.reserve(kTensorHeader + t.size() * (complex ? 16 : 8));
    out.push_back(static_cast<std::uint8_t>((complex ? kFlagComplex : 0) |
                                            (t.real_hint() ? kFlagRealHint : 0)));
    put_u64(out, t.n1());
    put_u64(out, t.n2());
    put_u64(out, t.n3());
    for (const auto& v : t.data()) {
        put_f64(out, v.real());
        if (complex) put_f64(out, v.imag());
    }
    return out;
}

Tensor3 decode_tensor(const std::vector<std::uint8_t>& bytes) {
    Reader r(bytes, "tensor file");
    r.magic("TNS1");
    const std::size_t flag_at = r.offset();
    const std::uint8_t flags = r.u8("flags");
    if (flags & ~(kFlagComplex | kFlagRealHint))
        throw FormatError("tensor file: unknown flag bits at byte " + std::to_string(flag_at),
                          flag_at);
    const Dims d = read_dims(r, "tensor file");
    const bool complex = flags & kFlagComplex;
    const std::size_t expected = d.size() * (complex ? 16 : 8);
    if (r.remaining() != expected)
        throw FormatError("tensor file: payload at byte " + std::to_string(r.offset()) +
                              " has " + std::to_string(r.remaining()) + " bytes, expected " +
                              std::to_string(expected),
                          r.offset() + std::min(r.remaining(), expected));
    std::vector<Complex> data(d.size());
    for (auto& v : data) {
        const double re = r.f64();
        v = Complex(re, complex ? r.f64() : 0.0);
    }
    try {
        return Tensor3(d, std::move(data), flags & kFlagRealHint);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("tensor file: ") + e.what(), kTensorHeader);
    }
}

std::vector<std::uint8_t> encode_mask(const SamplingMask& m) {
    std::vector<std::uint8_t> out{'M', 'S', 'K', '1'};
    out.reserve(kMaskHeader + m.count() * 24);
    put_u64(out, m.dims().n1);
    put_u64(out, m.dims().n2);
    put_u64(out, m.dims().n3);
    put_u64(out, m.count());
    for (const auto& [i, j, k] : m.observed()) {
        put_u64(out, i);
        put_u64(out, j);
        put_u64(out, k);
    }
    return out;
}

SamplingMask decode_mask(const std::vector<std::uint8_t>& bytes) {
    Reader r(bytes, "mask file");
    r.magic("MSK1");
    const Dims d = read_dims(r, "mask file");
    const std::size_t count_at = r.offset();
    const std::uint64_t count = r.u64("count");
    if (count > d.size())
        throw FormatError("mask file: count " + std::to_string(count) + " exceeds " +
                              std::to_string(d.size()) + " entries at byte " +
                              std::to_string(count_at),
                          count_at);
    if (r.remaining() != count * 24)
        throw FormatError("mask file: index block at byte " + std::to_string(r.offset()) +
                              " has " + std::to_string(r.remaining()) + " bytes, expected " +
                              std::to_string(count * 24),
                          r.offset() + std::min<std::size_t>(r.remaining(), count * 24));
    std::vector<Index3> idx;
    idx.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        const std::size_t at = r.offset();
        Index3 e{r.u64("i"), r.u64("j"), r.u64("k")};
        if (e[0] >= d.n1 || e[1] >= d.n2 || e[2] >= d.n3)
            throw FormatError("mask file: index out of range at byte " + std::to_string(at), at);
        if (!idx.empty() && !(idx.back() < e))
            throw FormatError("mask file: index not strictly increasing at byte " +
                                  std::to_string(at),
                              at);
        idx.push_back(e);
    }
    return SamplingMask(d, std::move(idx));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

Tensor3 read_tensor(const std::filesystem::path& path) { return decode_tensor(read_file(path)); }

void write_tensor(const std::filesystem::path& path, const Tensor3& t) {
    write_file(path, encode_tensor(t));
}

SamplingMask read_mask(const std::filesystem::path& path) { return decode_mask(read_file(path)); }

void write_mask(const std::filesystem::path& path, const SamplingMask& m) {
    write_file(path, encode_mask(m));
}

Matrix read_matrix(const std::filesystem::path& path) {
    const Tensor3 t = read_tensor(path);
    if (t.n3() != 1)
        throw FormatError("matrix file '" + path.string() + "' has n3=" + std::to_string(t.n3()) +
                              ", expected 1",
                          kMagicSize + 1 + 16);
    return t.slice(0);
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
    Tensor3 t(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), 1);
    t.slice(0) = m;
    write_tensor(path, t);
}

}  // namespace ttc::io
