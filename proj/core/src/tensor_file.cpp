#include "dctprep/tensor_file.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

#include "dctprep/image.hpp"

namespace dctprep {

namespace {

constexpr char kMagic[4] = {'F', 'C', 'R', 'T'};
constexpr std::uint8_t kVersion = 1;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(std::uint8_t(v & 0xff));
    out.push_back(std::uint8_t(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        out.push_back(std::uint8_t((v >> (8 * i)) & 0xff));
}

std::uint16_t get_u16(const std::uint8_t* p) {
    return std::uint16_t(p[0] | (std::uint16_t(p[1]) << 8));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) | (std::uint32_t(p[2]) << 16) |
           (std::uint32_t(p[3]) << 24);
}

std::size_t element_width(Dtype d) {
    return d == Dtype::f32 ? 4 : 2;
}

void check_consistency(const TensorFile& t) {
    if (t.dims[0] == 0 || t.dims[1] == 0 || t.dims[2] == 0)
        throw std::invalid_argument("tensor: zero dimension");
    std::size_t n = t.element_count();
    std::size_t have = t.dtype == Dtype::f32 ? t.f32().size() : t.i16().size();
    if (have != n)
        throw std::invalid_argument("tensor: payload has " + std::to_string(have) +
                                    " elements, dims require " + std::to_string(n));
    bool stored_is_f32 = std::holds_alternative<std::vector<float>>(t.payload);
    if (stored_is_f32 != (t.dtype == Dtype::f32))
        throw std::invalid_argument("tensor: payload variant does not match dtype");
    if (t.meta.selection_total() > 0 && t.meta.ordering == kOrderingZigzag &&
        std::uint32_t(t.meta.selection_total()) != t.dims[2])
        throw std::invalid_argument("tensor: selection counts sum to " +
                                    std::to_string(t.meta.selection_total()) +
                                    " but d2 is " + std::to_string(t.dims[2]));
}

}  // namespace

double TensorFile::value(std::size_t i) const {
    if (dtype == Dtype::f32)
        return f32()[i];
    return i16()[i];
}

std::vector<std::uint8_t> encode_tensor(const TensorFile& t) {
    check_consistency(t);
    std::vector<std::uint8_t> out;
    out.reserve(kTensorHeaderSize + t.element_count() * element_width(t.dtype));
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    out.push_back(std::uint8_t(t.dtype));
    for (auto d : t.dims)
        put_u32(out, d);
    put_u16(out, t.meta.quality_factor);
    out.push_back(t.meta.n_y);
    out.push_back(t.meta.n_cb);
    out.push_back(t.meta.n_cr);
    put_u32(out, t.meta.orig_height);
    put_u32(out, t.meta.orig_width);
    out.push_back(t.meta.ordering);

    if (t.dtype == Dtype::f32) {
        for (float v : t.f32())
            put_u32(out, std::bit_cast<std::uint32_t>(v));
    } else {
        for (std::int16_t v : t.i16())
            put_u16(out, std::bit_cast<std::uint16_t>(v));
    }
    return out;
}

TensorFile decode_tensor(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < kTensorHeaderSize)
        throw std::runtime_error("tensor: stream shorter than header");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw std::runtime_error("tensor: bad magic");
    if (bytes[4] != kVersion)
        throw std::runtime_error("tensor: unsupported version " + std::to_string(bytes[4]));
    if (bytes[5] != std::uint8_t(Dtype::f32) && bytes[5] != std::uint8_t(Dtype::i16))
        throw std::runtime_error("tensor: unknown dtype code " + std::to_string(bytes[5]));

    TensorFile t;
    t.dtype = Dtype(bytes[5]);
    for (int i = 0; i < 3; ++i)
        t.dims[i] = get_u32(bytes.data() + 6 + 4 * i);
    t.meta.quality_factor = get_u16(bytes.data() + 18);
    t.meta.n_y = bytes[20];
    t.meta.n_cb = bytes[21];
    t.meta.n_cr = bytes[22];
    t.meta.orig_height = get_u32(bytes.data() + 23);
    t.meta.orig_width = get_u32(bytes.data() + 27);
    t.meta.ordering = bytes[31];

    std::size_t n = t.element_count();
    std::size_t need = kTensorHeaderSize + n * element_width(t.dtype);
    if (bytes.size() != need)
        throw std::runtime_error("tensor: payload length mismatch: file has " +
                                 std::to_string(bytes.size()) + " bytes, dims require " +
                                 std::to_string(need));

    const std::uint8_t* p = bytes.data() + kTensorHeaderSize;
    if (t.dtype == Dtype::f32) {
        std::vector<float> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = std::bit_cast<float>(get_u32(p + 4 * i));
        t.payload = std::move(v);
    } else {
        std::vector<std::int16_t> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = std::bit_cast<std::int16_t>(get_u16(p + 2 * i));
        t.payload = std::move(v);
    }
    return t;
}

void write_tensor(const TensorFile& t, const std::string& path) {
    auto bytes = encode_tensor(t);
    write_file_atomic(path, bytes.data(), bytes.size());
}

TensorFile read_tensor(const std::string& path) {
    return decode_tensor(read_file(path));
}

}  // namespace dctprep
