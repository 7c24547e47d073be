#include "sphex/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sphex {

long Character::degree() const {
  auto d = values.at(0).as_integer();
  if (!d || *d <= 0 || *d > 1000000) fail(Errc::ParseError, "character degree must be a positive integer");
  return static_cast<long>(*d);
}

bool RGModule::empty() const {
  return std::all_of(mult.begin(), mult.end(), [](unsigned m) { return m == 0; });
}

namespace {

std::string trimmed(std::string s) {
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace

CharacterTable CharacterTable::load_file(const std::string& path, const FiniteGroup& g) {
  std::ifstream f(path);
  if (!f) fail(Errc::ParseError, "cannot open character table file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return load_text(ss.str(), g);
}

CharacterTable CharacterTable::load_text(const std::string& text, const FiniteGroup& g) {
  CharacterTable t;
  t.group_ = &g;

  struct FileClass {
    unsigned order;
    std::size_t size;
    std::string label;
  };
  std::vector<FileClass> fclasses;
  std::vector<std::pair<unsigned, std::vector<std::string>>> powermaps;

  std::istringstream in(text);
  std::string line;
  bool in_classes = false;
  while (std::getline(in, line)) {
    line = trimmed(line);
    if (line.empty()) continue;
    if (line == "classes") {
      in_classes = true;
      continue;
    }
    if (line == "endclasses") {
      in_classes = false;
      continue;
    }
    if (in_classes) {
      std::istringstream ls(line);
      FileClass fc;
      if (!(ls >> fc.order >> fc.size >> fc.label)) fail(Errc::ParseError, "bad class row: " + line);
      fclasses.push_back(fc);
      continue;
    }
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "group") {
      std::getline(ls, t.group_name_);
      t.group_name_ = trimmed(t.group_name_);
    } else if (kw == "exponent") {
      if (!(ls >> t.exponent_)) fail(Errc::ParseError, "bad exponent line: " + line);
    } else if (kw == "powermap") {
      std::string rest = line.substr(kw.size());
      auto colon = rest.find(':');
      if (colon == std::string::npos) fail(Errc::ParseError, "bad powermap line: " + line);
      unsigned p = 0;
      std::istringstream ps(rest.substr(0, colon));
      if (!(ps >> p) || p < 2) fail(Errc::ParseError, "bad powermap prime: " + line);
      std::istringstream vs(rest.substr(colon + 1));
      std::vector<std::string> labels;
      std::string lab;
      while (vs >> lab) labels.push_back(lab);
      powermaps.emplace_back(p, std::move(labels));
    } else if (kw == "char") {
      std::string rest = line.substr(kw.size());
      auto colon = rest.find(':');
      if (colon == std::string::npos) fail(Errc::ParseError, "bad char line: " + line);
      Character ch;
      ch.name = trimmed(rest.substr(0, colon));
      for (const auto& piece : split(rest.substr(colon + 1), ','))
        ch.values.push_back(CycloNum::parse(piece));
      t.complex_.push_back(std::move(ch));
    } else {
      fail(Errc::ParseError, "unrecognized line in character table file: " + line);
    }
  }

  // match file classes against the computed ones; among (order, size) ties
  // the listed order fixes the labelling, matching the canonical class sort
  const auto& gcl = g.classes();
  if (fclasses.size() != gcl.size())
    fail(Errc::ClassMismatch, "file declares " + std::to_string(fclasses.size()) + " classes, group has " +
                                  std::to_string(gcl.size()));
  for (std::size_t c = 0; c < gcl.size(); ++c) {
    if (fclasses[c].order != gcl[c].order_of_rep || fclasses[c].size != gcl[c].size())
      fail(Errc::ClassMismatch, "class row " + std::to_string(c) + " (order " + std::to_string(fclasses[c].order) +
                                    ", size " + std::to_string(fclasses[c].size) + ") does not match the group");
    if (fclasses[c].label != gcl[c].label)
      fail(Errc::ClassMismatch, "class label '" + fclasses[c].label + "' differs from computed '" + gcl[c].label + "'");
  }

  std::vector<std::pair<unsigned, std::vector<int>>> pms;
  for (auto& [p, labels] : powermaps) {
    if (labels.size() != gcl.size()) fail(Errc::ClassMismatch, "powermap length mismatch");
    std::vector<int> classes;
    for (const auto& lab : labels) {
      const ConjugacyClass* cc = g.class_by_label(lab);
      if (!cc) fail(Errc::ClassMismatch, "powermap names unknown class " + lab);
      classes.push_back(g.class_of(cc->representative));
    }
    pms.emplace_back(p, std::move(classes));
  }

  t.verify(pms);
  t.realify();
  return t;
}

void CharacterTable::verify(const std::vector<std::pair<unsigned, std::vector<int>>>& powermaps) {
  const FiniteGroup& g = *group_;
  const std::size_t nc = g.classes().size();

  if (exponent_ != g.exponent())
    fail(Errc::ClassMismatch, "file exponent " + std::to_string(exponent_) + " differs from computed " +
                                  std::to_string(g.exponent()));
  if (complex_.size() != nc)
    fail(Errc::OrthogonalityFailure,
         "need as many complex irreducibles as classes, got " + std::to_string(complex_.size()));

  BigInt degree_sum = 0;
  for (auto& ch : complex_) {
    if (ch.values.size() != nc) fail(Errc::ParseError, "character " + ch.name + " has wrong number of values");
    for (const auto& v : ch.values)
      if (exponent_ % v.conductor() != 0)
        fail(Errc::ParseError, "value conductor does not divide the exponent in " + ch.name);
    long d = ch.degree();
    degree_sum += BigInt(d) * d;
    // |chi(g)|^2 <= deg^2, checked exactly when the norm is rational
    for (const auto& v : ch.values) {
      auto norm = (v * v.conjugated()).as_rational();
      if (norm && *norm > Rational(BigInt(d) * d))
        fail(Errc::OrthogonalityFailure, "value exceeds degree bound in " + ch.name);
    }
  }
  if (degree_sum != BigInt(g.order()))
    fail(Errc::OrthogonalityFailure, "degree squares sum to " + degree_sum.str() + ", group order is " +
                                         std::to_string(g.order()));

  for (std::size_t i = 0; i < complex_.size(); ++i) {
    for (std::size_t j = i; j < complex_.size(); ++j) {
      CycloNum acc;
      for (std::size_t c = 0; c < nc; ++c) {
        CycloNum term = complex_[i].values[c] * complex_[j].values[c].conjugated();
        acc += CycloNum(Rational(g.classes()[c].size())) * term;
      }
      CycloNum want(i == j ? Rational(g.order()) : Rational(0));
      if (!(acc == want))
        fail(Errc::OrthogonalityFailure,
             "rows " + complex_[i].name + ", " + complex_[j].name + " are not orthonormal");
    }
  }

  for (const auto& [p, file_map] : powermaps) {
    for (std::size_t c = 0; c < nc; ++c)
      if (file_map[c] != g.power_class(p, static_cast<int>(c)))
        fail(Errc::ClassMismatch, "powermap " + std::to_string(p) + " disagrees with the group at class " +
                                      g.classes()[c].label);
  }

  // Galois consistency: chi(g^p) = sigma_k(chi(g)) whenever p is coprime to
  // the element order, k = p mod order lifted coprime to the exponent
  std::vector<unsigned> primes;
  for (unsigned p = 2; p <= g.order(); ++p) {
    bool isp = p > 1;
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) isp = false;
    if (isp && g.order() % p == 0) primes.push_back(p);
  }
  for (unsigned p : primes) {
    for (std::size_t c = 0; c < nc; ++c) {
      unsigned m = g.classes()[c].order_of_rep;
      if (m % p == 0 || m == 1) continue;
      unsigned k = p % m;
      while (std::gcd(k, exponent_) != 1) k += m;
      int pc = g.power_class(p, static_cast<int>(c));
      for (const auto& ch : complex_) {
        CycloNum lhs = ch.values[pc];
        CycloNum rhs = ch.values[c].lifted(exponent_).galois(k);
        if (!(lhs == rhs))
          fail(Errc::ClassMismatch, "Galois/powermap inconsistency at class " + g.classes()[c].label +
                                        " prime " + std::to_string(p) + " in " + ch.name);
      }
    }
  }

  for (const auto& ch : complex_) (void)frobenius_schur(ch);
}

int CharacterTable::frobenius_schur(const Character& chi) const {
  const FiniteGroup& g = *group_;
  CycloNum acc;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    int sq = g.power_class(2, static_cast<int>(c));
    acc += CycloNum(Rational(g.classes()[c].size())) * chi.values[sq];
  }
  auto v = acc.as_rational();
  if (!v) fail(Errc::NotAnIndicator, "indicator sum is irrational for " + chi.name);
  Rational ind = *v / Rational(g.order());
  if (ind == 1) return 1;
  if (ind == -1) return -1;
  if (ind == 0) return 0;
  fail(Errc::NotAnIndicator, "indicator of " + chi.name + " is not -1, 0 or 1");
}

void CharacterTable::realify() {
  const std::size_t nc = group_->classes().size();
  std::vector<bool> used(complex_.size(), false);
  std::vector<Character> real;
  for (std::size_t i = 0; i < complex_.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Character& chi = complex_[i];
    int fs = frobenius_schur(chi);
    Character r;
    r.real_irreducible = true;
    if (fs == 1) {
      r.name = chi.name;
      r.values = chi.values;
    } else if (fs == -1) {
      r.name = chi.name;
      r.values.reserve(nc);
      for (const auto& v : chi.values) r.values.push_back(CycloNum(Rational(2)) * v);
    } else {
      // pair chi with its complex conjugate
      std::size_t j = i;
      for (std::size_t k = i + 1; k < complex_.size(); ++k) {
        if (used[k]) continue;
        bool match = true;
        for (std::size_t c = 0; c < nc && match; ++c)
          match = complex_[k].values[c] == chi.values[c].conjugated();
        if (match) {
          j = k;
          break;
        }
      }
      if (j == i) fail(Errc::NotAnIndicator, "no conjugate partner for indicator-0 row " + chi.name);
      used[j] = true;
      r.name = chi.name + "+" + complex_[j].name;
      for (std::size_t c = 0; c < nc; ++c) r.values.push_back(chi.values[c] + complex_[j].values[c]);
    }
    // a real character is fixed by complex conjugation
    for (std::size_t c = 0; c < nc; ++c)
      if (!(r.values[c] == r.values[c].conjugated()))
        fail(Errc::NotAnIndicator, "realified row " + r.name + " is not conjugation-invariant");
    real.push_back(std::move(r));
  }
  std::stable_sort(real.begin(), real.end(), [](const Character& a, const Character& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.name < b.name;
  });
  real_ = std::move(real);
  real_kernels_.clear();
  for (const auto& r : real_) real_kernels_.push_back(kernel(r).members);
}

int CharacterTable::real_index(const std::string& name) const {
  for (std::size_t i = 0; i < real_.size(); ++i)
    if (real_[i].name == name) return static_cast<int>(i);
  return -1;
}

Subgroup CharacterTable::kernel(const Character& chi) const {
  const FiniteGroup& g = *group_;
  CycloNum deg(Rational(chi.degree()));
  std::vector<ElemId> members;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    if (chi.values[c] == deg) {
      const auto& m = g.classes()[c].members;
      members.insert(members.end(), m.begin(), m.end());
    }
  }
  Subgroup k = make_subgroup(g, std::move(members));
  if (!is_normal_in(k, whole_group(g))) fail(Errc::NotNormal, "character kernel must be normal");
  return k;
}

const std::vector<ElemId>& CharacterTable::real_kernel_members(std::size_t real_idx) const {
  return real_kernels_.at(real_idx);
}

long CharacterTable::fp_dim(const Character& chi, const Subgroup& h) const {
  const FiniteGroup& g = *group_;
  if (h.parent != &g) fail(Errc::BadArgument, "subgroup belongs to another group");
  CycloNum acc;
  for (ElemId e : h.members) acc += chi.values[g.class_of(e)];
  auto r = acc.as_rational();
  if (!r) fail(Errc::NotIntegral, "fixed point dimension sum is irrational for " + chi.name);
  Rational v = *r / Rational(h.members.size());
  if (denominator(v) != 1 || v < 0)
    fail(Errc::NotIntegral, "fixed point dimension of " + chi.name + " is not a non-negative integer");
  return static_cast<long>(numerator(v));
}

long CharacterTable::fp_dim_real(std::size_t real_idx, const Subgroup& h) const {
  return fp_dim(real_.at(real_idx), h);
}

long CharacterTable::fp_dim(const RGModule& v, const Subgroup& h) const {
  long total = 0;
  for (std::size_t i = 0; i < v.mult.size(); ++i)
    if (v.mult[i] > 0) total += static_cast<long>(v.mult[i]) * fp_dim(real_.at(i), h);
  return total;
}

bool CharacterTable::is_faithful(const RGModule& v) const {
  std::vector<ElemId> ker;
  bool any = false;
  for (std::size_t i = 0; i < v.mult.size(); ++i) {
    if (v.mult[i] == 0) continue;
    if (!any) {
      ker = real_kernels_[i];
      any = true;
    } else {
      ker = intersect_members(ker, real_kernels_[i]);
    }
  }
  if (!any) return group_->order() == 1;
  return ker.size() == 1;
}

long CharacterTable::dimension(const RGModule& v) const {
  long d = 0;
  for (std::size_t i = 0; i < v.mult.size(); ++i)
    if (v.mult[i] > 0) d += static_cast<long>(v.mult[i]) * real_[i].degree();
  return d;
}

std::string CharacterTable::module_name(const RGModule& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.mult.size(); ++i) {
    if (v.mult[i] == 0) continue;
    if (!out.empty()) out += '+';
    out += real_[i].name;
    if (v.mult[i] > 1) out += "^" + std::to_string(v.mult[i]);
  }
  return out.empty() ? "0" : out;
}

std::string CharacterTable::format_real_table() const {
  std::ostringstream os;
  os << "class";
  for (const auto& c : group_->classes()) os << '\t' << c.label;
  os << "\nsize";
  for (const auto& c : group_->classes()) os << '\t' << c.size();
  os << '\n';
  for (const auto& r : real_) {
    os << r.name;
    for (const auto& v : r.values) os << '\t' << v.to_string();
    os << '\n';
  }
  return os.str();
}

} // namespace sphex
