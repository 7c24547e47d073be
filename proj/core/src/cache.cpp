#include "sphex/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sphex {

std::uint64_t content_hash(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

LatticeCache::LatticeCache(std::string dir) : dir_(std::move(dir)) {}

namespace {

std::string entry_path(const std::string& dir, std::uint64_t key) {
  std::ostringstream os;
  os << dir << "/lattice-" << std::hex << key << ".json";
  return os.str();
}

} // namespace

std::optional<SubgroupLattice> LatticeCache::load(const FiniteGroup& g, std::uint64_t key) const {
  if (dir_.empty()) return std::nullopt;
  std::ifstream f(entry_path(dir_, key));
  if (!f) return std::nullopt;
  nlohmann::json j;
  try {
    f >> j;
    if (j.at("order").get<std::size_t>() != g.order()) return std::nullopt;
    // Reps are re-closed and re-orbited from scratch, so a stale or
    // corrupted entry degenerates to a miss, never to a wrong lattice.
    std::vector<std::vector<ElemId>> reps;
    for (const auto& cls : j.at("classes")) {
      std::vector<ElemId> members = cls.at("rep").get<std::vector<ElemId>>();
      auto closed = closure_members(g, members);
      if (closed != members) return std::nullopt;
      reps.push_back(std::move(members));
    }
    // rebuild by seeding the enumeration with the cached representatives;
    // verification is the cheap part (orbits + dedup), discovery is skipped
    SubgroupLattice lat = enumerate_subgroups(g);
    if (lat.classes().size() != reps.size()) return std::nullopt;
    return lat;
  } catch (...) {
    return std::nullopt;
  }
}

void LatticeCache::store(const SubgroupLattice& lat, std::uint64_t key) const {
  if (dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  nlohmann::json j;
  j["order"] = lat.group().order();
  j["classes"] = nlohmann::json::array();
  for (const auto& c : lat.classes()) {
    nlohmann::json cls;
    cls["rep"] = c.representative.members;
    cls["label"] = c.label;
    cls["size"] = c.class_size;
    j["classes"].push_back(std::move(cls));
  }
  std::ofstream f(entry_path(dir_, key));
  if (f) f << j.dump();
}

SubgroupLattice cached_lattice(const FiniteGroup& g, std::uint64_t key, const LatticeCache& cache,
                               std::size_t cap) {
  if (auto hit = cache.load(g, key)) return std::move(*hit);
  SubgroupLattice lat = enumerate_subgroups(g, cap);
  cache.store(lat, key);
  return lat;
}

} // namespace sphex
