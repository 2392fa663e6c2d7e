#ifndef LEFSCHETZ_VERDICT_HPP
#define LEFSCHETZ_VERDICT_HPP

// Surjectivity verdicts for the Lefschetz homomorphism and kernel tests for
// h-mark functions.

#include <lefschetz/burnside_units.hpp>
#include <lefschetz/char_tuples.hpp>

#include <variant>

namespace lefschetz {

enum class Outcome { surjective, not_surjective, unknown };

inline std::string outcome_name(Outcome o) {
  switch (o) {
  case Outcome::surjective: return "Surjective";
  case Outcome::not_surjective: return "NotSurjective";
  default: return "Unknown";
  }
}

inline Outcome parse_outcome(const std::string& s) {
  if (s == "Surjective")
    return Outcome::surjective;
  if (s == "NotSurjective")
    return Outcome::not_surjective;
  if (s == "Unknown")
    return Outcome::unknown;
  throw InputError("unknown outcome: " + s);
}

/// Criterion tags.
namespace criterion {
inline const std::string burnside_units = "burnside-units";
inline const std::string fusion_control = "fusion-control";
inline const std::string dihedral_sylow = "dihedral-sylow";
inline const std::string tuple_components = "tuple-components";
inline const std::string cyclic_sylow = "cyclic-sylow";
inline const std::string p_nilpotent = "p-nilpotent";
inline const std::string generator_count = "generator-count";
} // namespace criterion

struct Reason {
  std::string criterion;
  bool applies = false; ///< the criterion settled (or corroborates) the outcome
  std::string evidence;
  friend bool operator==(const Reason&, const Reason&) = default;
};

/// dim(CF_b(G, 2)) covers the stable units: values of one preimage per
/// basis vector of the stable space.
struct PreimageBasis {
  std::vector<IntVector> functions;
  friend bool operator==(const PreimageBasis&, const PreimageBasis&) = default;
};

/// A stable unit outside the image of dim, as signs on S-classes.
struct MissingUnit {
  std::vector<int> signs;
  friend bool operator==(const MissingUnit&, const MissingUnit&) = default;
};

struct GeneratorCount {
  std::size_t generators = 0;     ///< minimal generator count of R_{G,m}
  std::size_t cyclic_classes = 0; ///< c(G)
  friend bool operator==(const GeneratorCount&, const GeneratorCount&) = default;
};

/// Surjectivity by a theorem whose hypothesis was checked.
struct TheoremCertificate {
  std::string criterion;
  std::vector<std::pair<std::string, Integer>> data;
  friend bool operator==(const TheoremCertificate&, const TheoremCertificate&) = default;
};

using Certificate = std::variant<std::monostate, PreimageBasis, MissingUnit, GeneratorCount, TheoremCertificate>;

struct Verdict {
  Outcome outcome = Outcome::unknown;
  std::vector<Reason> reasons;
  Certificate certificate;

  bool has_certificate() const { return !std::holds_alternative<std::monostate>(certificate); }

  const Reason* reason(const std::string& tag) const {
    for (const auto& r : reasons)
      if (r.criterion == tag)
        return &r;
    return nullptr;
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// |N_G(S) / C_G(S)| for a Sylow subgroup S.
inline std::size_t sylow_automizer_order(const SubgroupClassTable& t) {
  const Subgroup& s = t.sylow();
  return normalizer(t.group(), s).order() / centralizer(t.group(), s).order();
}

namespace detail {

inline std::vector<int> signs_of(const Bits& b) {
  std::vector<int> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = b[i] ? -1 : 1;
  return out;
}

inline Verdict verdict_p2(const SubgroupClassTable& t, std::uint64_t m) {
  Verdict v;
  const Subgroup& s = t.sylow();
  if (m > 1) {
    std::size_t nontrivial = 0;
    for (const auto& c : tuple_components(t, m))
      nontrivial += !c.characters.is_trivial();
    bool trivial = nontrivial == 0;
    v.reasons.push_back({criterion::tuple_components, trivial,
                         trivial ? "every Hom(N_G(P)/P C_G(P), C_" + std::to_string(m) + ") is trivial"
                                 : std::to_string(nontrivial) + " nontrivial character components over C_" +
                                       std::to_string(m)});
    if (!trivial)
      return v;
  }
  auto r = p2_surjectivity(t);
  v.reasons.push_back({criterion::burnside_units, true,
                       "image dimension " + std::to_string(r.image.dimension()) + ", stable units dimension " +
                           std::to_string(r.stable.dimension())});
  bool fusion = !s.is_trivial() && controls_fusion(t.group(), t.scope(ClassScope::normalizer).acting(), s);
  v.reasons.push_back({criterion::fusion_control, fusion,
                       fusion ? "N_G(S) controls fusion in S" : "N_G(S) does not control fusion in S"});
  bool dihedral = is_dihedral_2group(s);
  v.reasons.push_back({criterion::dihedral_sylow, dihedral,
                       dihedral ? "S is dihedral of order " + std::to_string(s.order())
                                : "S is not dihedral"});
  if (!r.surjective && (fusion || dihedral))
    throw AlgorithmError("Burnside-unit test contradicts a fusion shortcut");
  if (r.surjective) {
    v.outcome = Outcome::surjective;
    PreimageBasis cert;
    for (const auto& f : r.preimages)
      cert.functions.push_back(f.values());
    v.certificate = std::move(cert);
  } else {
    v.outcome = Outcome::not_surjective;
    v.certificate = MissingUnit{signs_of(*r.missing)};
  }
  return v;
}

inline Verdict verdict_odd(const SubgroupClassTable& t, std::uint64_t m) {
  Verdict v;
  const Subgroup& s = t.sylow();
  bool cyclic = is_cyclic(s);
  std::size_t phi = sylow_automizer_order(t);
  if (cyclic) {
    v.reasons.push_back({criterion::cyclic_sylow, true,
                         "S is cyclic of order " + std::to_string(s.order()) + ", period " +
                             std::to_string(2 * phi)});
  } else {
    v.reasons.push_back({criterion::cyclic_sylow, false, "S is not cyclic"});
  }
  bool nilpotent = is_p_nilpotent(t);
  v.reasons.push_back({criterion::p_nilpotent, nilpotent,
                       nilpotent ? "every N_G(P)/C_G(P) is a p-group" : "some N_G(P)/C_G(P) is not a p-group"});
  auto r = reduced_tuple_group(t, m);
  GeneratorCount gc{min_generators(r), t.cyclic_class_count()};
  bool many = gc.generators >= gc.cyclic_classes;
  v.reasons.push_back({criterion::generator_count, many,
                       "R_G = " + r.group().structure() + ", d(R_G) = " + std::to_string(gc.generators) +
                           ", c(G) = " + std::to_string(gc.cyclic_classes)});
  if (many && (cyclic || nilpotent))
    throw AlgorithmError("generator count contradicts a surjectivity theorem");
  if (cyclic) {
    v.outcome = Outcome::surjective;
    v.certificate = TheoremCertificate{criterion::cyclic_sylow,
                                       {{"sylow_order", Integer(s.order())}, {"period", Integer(2 * phi)}}};
  } else if (nilpotent) {
    v.outcome = Outcome::surjective;
    v.certificate = TheoremCertificate{criterion::p_nilpotent, {{"sylow_order", Integer(s.order())}}};
  } else if (many) {
    v.outcome = Outcome::not_surjective;
    v.certificate = gc;
  }
  return v;
}

} // namespace detail

/// Whether Lambda is surjective over the field whose unit group has order m.
/// For p = 2 the exact test is the one for F_2 (m = 1).
inline Verdict lefschetz_verdict(const SubgroupClassTable& t, std::uint64_t m) {
  if (m == 0)
    throw InputError("unit order must be positive");
  if (t.prime() == 2)
    return detail::verdict_p2(t, m);
  return detail::verdict_odd(t, m);
}

inline Verdict lefschetz_verdict(const FiniteGroup& g, std::uint64_t p, std::uint64_t m) {
  return lefschetz_verdict(p_subgroup_classes(g, p), m);
}

/// Default unit order: p - 1, or 1 for p = 2.
inline std::uint64_t default_unit_order(std::uint64_t p) { return p == 2 ? 1 : p - 1; }

/// 2 |Aut_G(S)| for a nontrivial cyclic Sylow subgroup S.
inline std::size_t period_cyclic(const SubgroupClassTable& t) {
  if (t.prime() == 2)
    throw InputError("period_cyclic: the prime must be odd");
  if (t.sylow().is_trivial() || !is_cyclic(t.sylow()))
    throw InputError("period_cyclic: Sylow " + std::to_string(t.prime()) + "-subgroup is not nontrivial cyclic");
  return 2 * sylow_automizer_order(t);
}

inline std::size_t period_cyclic(const FiniteGroup& g, std::uint64_t p) {
  return period_cyclic(p_subgroup_classes(g, p));
}

/// Stand-in for an endotrivial complex: its h-mark function, which must be
/// Borel-Smith. trivial_homology is the caller's assertion.
struct HMarkCandidate {
  SuperclassFunction h;
  bool trivial_homology = true;

  explicit HMarkCandidate(SuperclassFunction f, bool trivial = true)
      : h(std::move(f)), trivial_homology(trivial) {
    auto check = check_borel_smith(h);
    if (!check)
      throw InputError("h is not Borel-Smith: " + check.violations.front().description);
  }
};

/// h(lower) = h(upper) mod modulus.
struct Congruence {
  std::size_t lower = 0; ///< class index
  std::size_t upper = 0;
  Integer modulus = 0;
  bool holds = false;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

struct KernelReport {
  bool member = false;
  bool exact = false; ///< false when only necessary conditions were checked
  std::optional<std::size_t> odd_class; ///< a class where h is odd
  std::vector<Congruence> congruences;

  const Congruence* violated() const {
    for (const auto& c : congruences)
      if (!c.holds)
        return &c;
    return nullptr;
  }
};

namespace detail {

inline void require_trivial_homology(const HMarkCandidate& cand) {
  if (!cand.trivial_homology)
    throw InputError("kernel tests need a candidate with trivial homology");
}

inline void require_table(const HMarkCandidate& cand, const SubgroupClassTable& t) {
  if (cand.h.table_ptr() != t.table_ptr(ClassScope::group))
    throw InputError("h is not on this group's class table");
}

inline std::optional<std::size_t> first_odd(const SuperclassFunction& h) {
  for (std::size_t c = 0; c < h.size(); ++c)
    if (h[c] % 2 != 0)
      return c;
  return std::nullopt;
}

inline Congruence congruence(const SuperclassFunction& h, std::size_t lower, std::size_t upper, Integer modulus) {
  bool holds = mod_floor(h[lower] - h[upper], modulus) == 0;
  return {lower, upper, std::move(modulus), holds};
}

/// Order of the largest normal p'-subgroup: x lies in it iff its normal
/// closure has order prime to p.
inline std::size_t largest_normal_pprime_order(const TableGroup& q, std::uint64_t p) {
  std::size_t count = 0;
  for (std::uint32_t x = 0; x < q.order(); ++x) {
    if (q.element_order(x) % p == 0)
      continue;
    std::vector<std::uint32_t> conjugates;
    for (std::uint32_t y = 0; y < q.order(); ++y)
      conjugates.push_back(q.mul(q.mul(y, x), q.inv(y)));
    if (q.closure(conjugates).size() % p != 0)
      ++count;
  }
  return count;
}

} // namespace detail

/// Exact kernel test for odd p and cyclic S: h is even and
/// h(1) = h(P) mod 2 Phi(S) for every nontrivial P.
inline KernelReport kernel_membership_cyclic(const SubgroupClassTable& t, const HMarkCandidate& cand) {
  detail::require_trivial_homology(cand);
  detail::require_table(cand, t);
  Integer modulus = Integer(period_cyclic(t));
  KernelReport out;
  out.exact = true;
  out.odd_class = detail::first_odd(cand.h);
  std::size_t trivial = t.classes().class_of(trivial_subgroup(t.group()));
  for (std::size_t c = 0; c < t.size(); ++c)
    if (c != trivial)
      out.congruences.push_back(detail::congruence(cand.h, trivial, c, modulus));
  out.member = !out.odd_class && !out.violated();
  return out;
}

/// p = 2: exact (h even). Odd p: h even and, for K normal of index p in H,
/// h(K) = h(H) mod 2 |O_p'(Aut_{N_G(K)}(H))|; necessary only.
inline KernelReport kernel_necessary(const SubgroupClassTable& t, const HMarkCandidate& cand) {
  detail::require_trivial_homology(cand);
  detail::require_table(cand, t);
  KernelReport out;
  out.odd_class = detail::first_odd(cand.h);
  if (t.prime() == 2) {
    out.exact = true;
    out.member = !out.odd_class;
    return out;
  }
  const FiniteGroup& g = t.group();
  const SubgroupLattice& lat = t.lattice();
  const ClassTable& classes = t.classes();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t c = 0; c < t.size(); ++c) {
    const Subgroup& h = t.rep(c);
    for (const Subgroup& k : lat.subgroups()) {
      if (k.order() * t.prime() != h.order() || !k.is_subgroup_of(h))
        continue;
      Subgroup nk = normalizer(g, k);
      auto aut = automizer(nk, h);
      Integer modulus = 2 * Integer(detail::largest_normal_pprime_order(aut.table(), t.prime()));
      std::size_t lower = classes.class_of(k);
      auto cong = detail::congruence(cand.h, lower, c, modulus);
      if (!seen.insert({lower, c}).second && cong.holds)
        continue;
      out.congruences.push_back(std::move(cong));
    }
  }
  out.member = !out.odd_class && !out.violated();
  return out;
}

} // namespace lefschetz

#endif // LEFSCHETZ_VERDICT_HPP
