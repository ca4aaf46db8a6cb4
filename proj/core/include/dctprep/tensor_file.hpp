#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace dctprep {

/// Element type of a stored tensor: f32 for real-valued coefficients,
/// i16 for quantized integer coefficients.
enum class Dtype : std::uint8_t { f32 = 1, i16 = 2 };

/// Frequency-to-channel ordering tags recorded in tensor files.
inline constexpr std::uint8_t kOrderingZigzag = 1;     // zig-zag channel stacking
inline constexpr std::uint8_t kOrderingCondensed = 2;  // top-left k x k spatial layout

/// Per-tensor metadata carried verbatim in the file header.
struct TensorMeta {
    std::uint16_t quality_factor = 0;  // 0 = unquantized
    std::uint8_t n_y = 0;              // selected Y / Cb / Cr channel counts
    std::uint8_t n_cb = 0;
    std::uint8_t n_cr = 0;
    std::uint32_t orig_height = 0;     // source image dims before 8x8 blocking
    std::uint32_t orig_width = 0;
    std::uint8_t ordering = kOrderingZigzag;

    int selection_total() const { return int(n_y) + int(n_cb) + int(n_cr); }

    friend bool operator==(const TensorMeta&, const TensorMeta&) = default;
};

/// A (d0, d1, d2) tensor in row-major channel-last layout with a fixed
/// little-endian on-disk encoding:
///
///   magic "FCRT" | version u8 | dtype u8 | d0,d1,d2 u32 | qf u16 |
///   nY,nCb,nCr u8 | orig_h u32 | orig_w u32 | ordering u8 | payload
///
/// The header is exactly 32 bytes; the payload is d0*d1*d2 raw elements.
struct TensorFile {
    std::array<std::uint32_t, 3> dims{};
    Dtype dtype = Dtype::f32;
    TensorMeta meta;
    std::variant<std::vector<float>, std::vector<std::int16_t>> payload;

    std::size_t element_count() const {
        return std::size_t(dims[0]) * dims[1] * dims[2];
    }
    const std::vector<float>& f32() const { return std::get<std::vector<float>>(payload); }
    const std::vector<std::int16_t>& i16() const {
        return std::get<std::vector<std::int16_t>>(payload);
    }

    /// Element as double regardless of dtype; i is the flat row-major index.
    double value(std::size_t i) const;

    friend bool operator==(const TensorFile&, const TensorFile&) = default;
};

inline constexpr std::size_t kTensorHeaderSize = 32;

/// Serializes; throws std::invalid_argument on zero dims, payload/dims
/// mismatch, or selection counts inconsistent with d2.
std::vector<std::uint8_t> encode_tensor(const TensorFile& t);

/// Parses; throws std::runtime_error on bad magic, version mismatch, or
/// dims/payload length mismatch.
TensorFile decode_tensor(const std::vector<std::uint8_t>& bytes);

void write_tensor(const TensorFile& t, const std::string& path);  // atomic
TensorFile read_tensor(const std::string& path);

}  // namespace dctprep
