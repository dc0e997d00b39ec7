#include "aec/sim/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace aec::sim {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] |
                                    (static_cast<std::uint16_t>(p[1]) << 8));
}

void put_u32(std::string& s, std::uint32_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

WavData read_wav_mono16(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw IoError(path + ": not a RIFF/WAVE file");
  }

  WavData out;
  std::uint16_t channels = 0, bits = 0, format = 0;
  bool have_fmt = false, have_data = false;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
    const std::uint32_t chunk_size = read_u32(bytes.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_size > bytes.size()) {
      throw IoError(path + ": truncated chunk");
    }
    if (std::memcmp(id, "fmt ", 4) == 0 && chunk_size >= 16) {
      format = read_u16(bytes.data() + body);
      channels = read_u16(bytes.data() + body + 2);
      out.sample_rate = read_u32(bytes.data() + body + 4);
      bits = read_u16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      if (!have_fmt) throw IoError(path + ": data chunk before fmt");
      if (format != 1 || channels != 1 || bits != 16) {
        throw IoError(path + ": need 16-bit PCM mono");
      }
      const std::size_t count = chunk_size / 2;
      out.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        const std::int16_t raw = static_cast<std::int16_t>(
            read_u16(bytes.data() + body + 2 * i));
        out.samples[i] = static_cast<Real>(raw) / 32768.0;
      }
      have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }
  if (!have_fmt || !have_data) {
    throw IoError(path + ": missing fmt or data chunk");
  }
  return out;
}

void write_wav_mono16(const std::string& path,
                      const std::vector<Real>& samples, Real sample_rate) {
  const std::uint32_t rate = static_cast<std::uint32_t>(std::lround(sample_rate));
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(samples.size() * 2);
  std::string buf;
  buf.reserve(44 + data_bytes);
  buf.append("RIFF");
  put_u32(buf, 36 + data_bytes);
  buf.append("WAVEfmt ");
  put_u32(buf, 16);
  put_u16(buf, 1);  // PCM
  put_u16(buf, 1);  // mono
  put_u32(buf, rate);
  put_u32(buf, rate * 2);
  put_u16(buf, 2);
  put_u16(buf, 16);
  buf.append("data");
  put_u32(buf, data_bytes);
  for (Real s : samples) {
    const Real clipped = std::clamp(s, -1.0, 32767.0 / 32768.0);
    const std::int16_t raw =
        static_cast<std::int16_t>(std::lround(clipped * 32768.0));
    put_u16(buf, static_cast<std::uint16_t>(raw));
  }
  std::ofstream outf(path, std::ios::binary);
  if (!outf || !outf.write(buf.data(), static_cast<std::streamsize>(buf.size()))) {
    throw IoError("cannot write " + path);
  }
}

}  // namespace aec::sim
