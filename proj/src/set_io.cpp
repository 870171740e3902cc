#include "f2/set_io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace f2 {

namespace {
constexpr std::array<char, 8> kMagic = {'F', '2', 'S', 'E', 'T', '\0', '\0', '\0'};
}

void write_set_text(std::ostream& out, const DenseSet& a) {
  out << "n " << a.dim() << "\n";
  a.for_each([&](GroupElement x) { out << x << "\n"; });
}

DenseSet read_set_text(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag >> n) || tag != "n")
    throw std::runtime_error("set file: expected leading \"n <dim>\" line");
  DenseSet a(n);
  long long prev = -1;
  long long x;
  while (in >> x) {
    if (x < 0 || static_cast<std::uint64_t>(x) >= a.universe_size())
      throw std::runtime_error("set file: element " + std::to_string(x) + " out of range");
    if (x <= prev)
      throw std::runtime_error("set file: elements must be strictly ascending");
    a.insert(static_cast<GroupElement>(x));
    prev = x;
  }
  if (!in.eof() && in.fail()) throw std::runtime_error("set file: malformed element list");
  return a;
}

void write_set_binary(std::ostream& out, const DenseSet& a) {
  out.write(kMagic.data(), kMagic.size());
  const char n = static_cast<char>(a.dim());
  out.write(&n, 1);
  const std::uint64_t nbytes = (a.universe_size() + 7) / 8;
  std::string buf(nbytes, '\0');
  a.for_each([&](GroupElement x) { buf[x >> 3] |= char(1u << (x & 7)); });
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

DenseSet read_set_binary(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic)
    throw std::runtime_error("set file: bad magic");
  char nc = 0;
  if (!in.read(&nc, 1)) throw std::runtime_error("set file: truncated header");
  const int n = nc;
  DenseSet a(n);
  const std::uint64_t nbytes = (a.universe_size() + 7) / 8;
  std::string buf(nbytes, '\0');
  if (!in.read(buf.data(), static_cast<std::streamsize>(nbytes)))
    throw std::runtime_error("set file: truncated bit array");
  for (std::uint64_t b = 0; b < nbytes; ++b) {
    unsigned char byte = static_cast<unsigned char>(buf[b]);
    while (byte) {
      int bit = std::countr_zero(static_cast<unsigned>(byte));
      a.insert(static_cast<GroupElement>(b * 8 + bit));
      byte = static_cast<unsigned char>(byte & (byte - 1));
    }
  }
  return a;
}

DenseSet read_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open set file: " + path);
  std::array<char, 8> head{};
  in.read(head.data(), head.size());
  in.clear();
  in.seekg(0);
  if (head == kMagic) return read_set_binary(in);
  return read_set_text(in);
}

void write_set_file(const std::string& path, const DenseSet& a) {
  const bool binary = path.size() >= 4 && path.compare(path.size() - 4, 4, ".bin") == 0;
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot write set file: " + path);
  if (binary)
    write_set_binary(out, a);
  else
    write_set_text(out, a);
}

}  // namespace f2
