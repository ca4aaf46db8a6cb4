#include "dctprep/image.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace dctprep {

namespace {

class ByteCursor {
  public:
    explicit ByteCursor(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    bool eof() const { return pos_ >= bytes_.size(); }
    std::uint8_t peek() const { return bytes_[pos_]; }
    std::uint8_t get() { return bytes_[pos_++]; }
    std::size_t remaining() const { return bytes_.size() - pos_; }
    const std::uint8_t* ptr() const { return bytes_.data() + pos_; }

  private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Skips whitespace and '#' comments (which run to end of line).
void skip_separators(ByteCursor& cur) {
    while (!cur.eof()) {
        if (is_pnm_space(cur.peek())) {
            cur.get();
        } else if (cur.peek() == '#') {
            while (!cur.eof() && cur.get() != '\n') {
            }
        } else {
            return;
        }
    }
}

int read_pnm_int(ByteCursor& cur, const char* what) {
    skip_separators(cur);
    if (cur.eof() || cur.peek() < '0' || cur.peek() > '9')
        throw std::runtime_error(std::string("ppm: malformed header: expected ") + what);
    long v = 0;
    while (!cur.eof() && cur.peek() >= '0' && cur.peek() <= '9') {
        v = v * 10 + (cur.get() - '0');
        if (v > 1'000'000'000)
            throw std::runtime_error(std::string("ppm: ") + what + " out of range");
    }
    return static_cast<int>(v);
}

}  // namespace

RgbImage read_ppm(const std::vector<std::uint8_t>& bytes) {
    ByteCursor cur(bytes);
    if (cur.remaining() < 2)
        throw std::runtime_error("ppm: truncated stream (no magic)");
    char m0 = static_cast<char>(cur.get());
    char m1 = static_cast<char>(cur.get());
    if (m0 != 'P' || m1 != '6') {
        if (m0 == 'P' && m1 >= '1' && m1 <= '7')
            throw std::runtime_error(std::string("ppm: unsupported format P") + m1 +
                                     " (only binary P6 is supported)");
        throw std::runtime_error("ppm: bad magic, not a PPM stream");
    }

    int width = read_pnm_int(cur, "width");
    int height = read_pnm_int(cur, "height");
    int maxval = read_pnm_int(cur, "maxval");
    if (width < 1 || height < 1)
        throw std::runtime_error("ppm: non-positive dimensions");
    if (maxval != 255)
        throw std::runtime_error("ppm: unsupported maxval " + std::to_string(maxval) +
                                 " (only 255)");

    // Exactly one whitespace byte separates the header from the payload.
    if (cur.eof() || !is_pnm_space(cur.peek()))
        throw std::runtime_error("ppm: malformed header: missing payload separator");
    cur.get();

    const std::size_t payload = static_cast<std::size_t>(3) * width * height;
    if (cur.remaining() < payload)
        throw std::runtime_error("ppm: truncated payload: need " + std::to_string(payload) +
                                 " bytes, have " + std::to_string(cur.remaining()));

    RgbImage img(height, width);
    std::copy(cur.ptr(), cur.ptr() + payload, img.data.begin());
    return img;
}

std::vector<std::uint8_t> write_ppm(const RgbImage& img) {
    if (!img.valid())
        throw std::invalid_argument("write_ppm: invalid image");
    std::string header = "P6\n" + std::to_string(img.width) + " " +
                         std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + img.data.size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

RgbImage read_ppm_file(const std::string& path) {
    return read_ppm(read_file(path));
}

void write_ppm_file(const RgbImage& img, const std::string& path) {
    auto bytes = write_ppm(img);
    write_file_atomic(path, bytes.data(), bytes.size());
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw std::runtime_error("read error on " + path);
    return bytes;
}

void write_file_atomic(const std::string& path, const void* data, std::size_t size) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
        out.flush();
        if (!out)
            throw std::runtime_error("write error on " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path + ": " +
                                 ec.message());
    }
}

}  // namespace dctprep
