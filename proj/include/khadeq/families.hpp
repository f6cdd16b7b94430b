#ifndef KHADEQ_FAMILIES_HPP
#define KHADEQ_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "khadeq/braid.hpp"
#include "khadeq/graph.hpp"
#include "khadeq/homology.hpp"

namespace khadeq {

// Torus braid (s_{m-1} ... s_2 s_1)^n on m strands.
BraidWord torus_braid(int m, int n);

// Standard diagram of the (3,-r) torus link: the mirror of torus_braid(3,r).
BraidWord negative_torus_braid(int r);

// Torus braid on m >= 6 strands with two extra positive rows s2 s4 around a
// row of negative generators at the odd positions:
//   m even: beta(m,n) s2 s4 (s1^- s3^- ... s_{m-1}^-) s2 s4
//   m odd:  beta(m,n) s2 s4 (s1^- s3^- ... s_{m-2}^-) s2 s4
BraidWord twisted_word(int m, int n);

// For odd s >= 5, r repeats of the all-negative pattern
//   s1^-1 s3^-3 s5^-3 ... s_{s-2}^-3  s2^-1 s4^-3 ... s_{s-1}^-3.
BraidWord f_family(int s, int r);

// Kauffman state of a 3-cable of the trefoil with a negative clasp,
// transcribed as a .chd fixture; its Lando graph is a 4-cycle.
std::string cable_fixture_chd();

// Expected shape of a Lando graph, checkable without general isomorphism.
struct LandoPattern {
  enum Kind { Empty, Cycle, Stars } kind = Empty;
  int cycle_length = 0;
  int star_count = 0, star_rays = 0;
};
bool matches_pattern(const Graph& g, const LandoPattern& p);

struct FamilySpec {
  std::string family;
  std::map<std::string, int> params;
  std::optional<BraidWord> word;        // braid families
  std::optional<std::string> chd;       // state fixtures
  LandoPattern lando;
  AbelianGroupSequence predicted_homology;  // reduced homology of I(D)
};

// Families by name: "torus", "negative-torus", "twisted", "f", "cable".
FamilySpec family_spec(const std::string& name,
                       const std::map<std::string, int>& params);

// Closed-form reduced homology of independence complexes of paths and
// cycles. path_homology(n) is for the path with n edges (n+1 vertices):
// trivial when n = 3k, one Z in degree k when n = 3k+1 or 3k+2.
// cycle_homology(n), n >= 3: Z^2 in degree k-1 when n = 3k, one Z in degree
// k-1 when n = 3k+-1.
AbelianGroupSequence path_homology(int n);
AbelianGroupSequence cycle_homology(int n);

nlohmann::ordered_json family_to_json(const FamilySpec& f);

}  // namespace khadeq

#endif
