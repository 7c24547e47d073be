#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphex/chartab.hpp"
#include "sphex/lattice.hpp"
#include "sphex/oliver.hpp"

namespace sphex {

enum class Mode { One, Odd };
enum class Scope { Homology, Standard };

std::string to_string(Mode m);
std::string to_string(Scope s);

// One verified application of an exclusion rule to a candidate module.
// Everything cited is stored concretely so an independent checker can
// replay it from raw group and character data.
struct RuleApplication {
  std::string rule; // "R1".."R5"
  std::string conclusion;
  std::string valid_on; // "Z-homology-sphere" or "standard-sphere"
  std::vector<std::string> axioms;
  std::vector<std::pair<std::string, std::string>> classes_used;     // role -> class label
  std::vector<std::pair<std::string, std::vector<ElemId>>> witnesses; // role -> concrete members
  std::vector<std::pair<std::string, long>> cited_dims;
  std::vector<std::pair<std::string, OliverChain>> oliver_chains; // role -> non-Oliver witness
};

struct CandidateVerdict {
  RGModule module;
  std::string name;
  long dimension = 0;
  bool excluded = false;
  std::optional<RuleApplication> rule;
};

struct ExclusionReport {
  std::string group_name;
  Mode mode = Mode::One;
  Scope scope = Scope::Homology;
  long dimension = 0;
  bool effective = false;
  std::optional<int> pseudofree;
  std::vector<CandidateVerdict> candidates;
  bool excluded = false; // every candidate carries a conclusive rule
  std::vector<std::string> surviving;
  std::vector<std::string> surviving_families;
};

struct CandidateConstraints {
  bool effective = false;
  std::optional<int> pseudofree;
  std::vector<int> forbidden_summands; // real irreducible indices
};

struct PseudofreeEntry {
  long dimension = 0;
  std::vector<std::string> surviving;
  std::vector<std::string> surviving_families;
};

// Rule engine over a fixed (group, character table, lattice) context.
// Construction precomputes the fixed-point dimension matrix, Oliver
// verdicts for every subgroup class, and the witness tuples
// (H1, H2, P <= H1 n H2) with <H1, H2> the whole group that the rules
// quantify over.
class ExclusionEngine {
public:
  ExclusionEngine(const FiniteGroup& g, const CharacterTable& t, const SubgroupLattice& lat);

  const CharacterTable& table() const { return *table_; }
  const SubgroupLattice& lattice() const { return *lat_; }

  long fp(std::size_t real_idx, int cls) const { return fp_[real_idx][cls]; }
  std::vector<long> fp_vector(const RGModule& v) const; // per lattice class
  const OliverVerdict& class_oliver(int cls) const { return oliver_[cls]; }

  std::vector<RGModule> enumerate_candidates(long n, const CandidateConstraints& c) const;

  std::optional<RuleApplication> rule_R1_two_point(const RGModule& v) const;
  std::optional<RuleApplication> rule_R2_index_two(const RGModule& v) const;
  std::optional<RuleApplication> rule_R3_low_sphere(const RGModule& v) const;
  std::optional<RuleApplication> rule_R4_parity(const RGModule& v) const;
  bool r5_applicable() const;
  // per-candidate branch of the dichotomy, sound ONLY for one fixed point
  std::optional<RuleApplication> rule_R5_one_point(const RGModule& v) const;

  ExclusionReport exclude(long n, Mode mode, Scope scope, bool effective,
                          std::optional<int> pseudofree) const;
  std::vector<PseudofreeEntry> pseudofree_scan(int k, bool effective, long n_max = 64) const;

  std::string family_name(const RGModule& v) const;

private:
  const FiniteGroup* group_;
  const CharacterTable* table_;
  const SubgroupLattice* lat_;

  struct WitnessTuple {
    int cls_a, cls_b, cls_p;
    bool two_groups; // |A|, |B| and |P| all powers of two
    std::vector<ElemId> wa, wb, wp;
  };
  std::vector<WitnessTuple> tuples_;
  std::vector<std::vector<long>> fp_; // [real irreducible][lattice class]
  std::vector<OliverVerdict> oliver_;
  int trivial_char_ = -1;
  int g2_class_ = -1;
  std::vector<ElemId> g2_members_;
  int iU42_ = -1, iU52_ = -1, iU51_ = -1, iU6_ = -1;
  int cQ8A_ = -1, cQ16_ = -1, cDic6_ = -1;
  int r5_tuple_ = -1; // index into tuples_ witnessing <Q16, [24,4]> = G through Q8A

  RuleApplication make_tuple_application(const WitnessTuple& t, const char* rule, const char* conclusion,
                                         const char* valid_on, const std::vector<long>& fpv) const;
};

bool reverify_report(const FiniteGroup& g, const CharacterTable& t, const ExclusionReport& report);

} // namespace sphex
