#include "sphex/perm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sphex {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      fail(Errc::BadArgument, "image array is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(im));
}

unsigned Permutation::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  unsigned long long ord = 1;
  for (unsigned s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    unsigned len = 0;
    Point t = static_cast<Point>(s);
    do {
      seen[t] = true;
      t = images_[t];
      ++len;
    } while (t != s);
    ord = std::lcm(ord, static_cast<unsigned long long>(len));
  }
  return static_cast<unsigned>(ord);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) fail(Errc::DegreeMismatch, "composing permutations of different degree");
  std::vector<Point> im(a.degree());
  for (unsigned x = 0; x < a.degree(); ++x) im[x] = a.images_[b.images_[x]];
  return Permutation(std::move(im));
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation Permutation::parse_cycles(const std::string& text, unsigned degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == text.size()) fail(Errc::ParseError, "empty permutation");
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail(Errc::ParseError, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') { ++i; break; }
      unsigned v = 0;
      bool got = false;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        ++i;
        got = true;
      }
      if (!got) fail(Errc::ParseError, "expected point in cycle: " + text);
      if (v < 1 || v > degree) fail(Errc::ParseError, "point out of range in: " + text);
      cycle.push_back(static_cast<Point>(v - 1));
    }
    any = true;
    if (cycle.size() >= 2) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        Point from = cycle[k];
        Point to = cycle[(k + 1) % cycle.size()];
        if (im[from] != from) fail(Errc::ParseError, "point repeated across cycles: " + text);
        im[from] = to;
      }
    }
  }
  if (!any) fail(Errc::ParseError, "no cycles found: " + text);
  return Permutation(std::move(im));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == s) { seen[s] = true; continue; }
    out += '(';
    Point t = static_cast<Point>(s);
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(t + 1);
      seen[t] = true;
      t = images_[t];
    } while (t != s);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

GroupFile parse_group_file(const std::string& text) {
  GroupFile gf;
  std::istringstream in(text);
  std::string line;
  bool have_degree = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (!have_degree) {
      std::istringstream ls(line);
      std::string kw;
      unsigned deg = 0;
      ls >> kw >> deg;
      if (kw != "degree" || deg == 0) fail(Errc::ParseError, "group file must start with 'degree N'");
      gf.degree = deg;
      have_degree = true;
      continue;
    }
    gf.generators.push_back(Permutation::parse_cycles(line, gf.degree));
  }
  if (!have_degree) fail(Errc::ParseError, "group file missing 'degree N' line");
  if (gf.generators.empty()) fail(Errc::ParseError, "group file has no generators");
  return gf;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::ParseError, "cannot open group file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_group_file(ss.str());
}

std::string write_group_file(const GroupFile& gf) {
  std::string out = "degree " + std::to_string(gf.degree) + "\n";
  for (const auto& g : gf.generators) out += g.to_cycles() + "\n";
  return out;
}

} // namespace sphex
