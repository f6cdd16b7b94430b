#ifndef KHADEQ_HOMOLOGY_HPP
#define KHADEQ_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "khadeq/simplicial.hpp"

namespace khadeq {

// Finitely generated abelian group: free rank plus invariant factors
// d1 | d2 | ... (each >= 2).
struct AbelianGroup {
  int rank = 0;
  std::vector<int64_t> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool torsion_free() const { return torsion.empty(); }
  std::string to_string() const;  // "0", "Z", "Z^2 ⊕ Z/2", ...
  bool operator==(const AbelianGroup&) const = default;
};

// Graded family of groups indexed by integer degree; unset degrees are
// trivial. Degrees run from -1 upward (reduced (co)homology of possibly
// empty complexes).
class AbelianGroupSequence {
 public:
  const AbelianGroup& at(int degree) const;
  void set(int degree, AbelianGroup g);  // drops trivial groups
  const std::map<int, AbelianGroup>& nontrivial() const { return groups_; }
  bool all_trivial() const { return groups_.empty(); }
  bool torsion_free() const;
  bool operator==(const AbelianGroupSequence&) const = default;

 private:
  std::map<int, AbelianGroup> groups_;
};

// Dense row-major integer matrix.
struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<int64_t> a;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  int64_t& at(size_t r, size_t c) { return a[r * cols + c]; }
  int64_t at(size_t r, size_t c) const { return a[r * cols + c]; }
};

struct SmithResult {
  std::vector<int64_t> factors;  // nonzero diagonal, d1 | d2 | ...
  size_t rank = 0;
};

// Smith normal form over Z with smallest-pivot selection. All arithmetic is
// checked 64-bit; overflow raises OverflowError rather than wrapping.
SmithResult smith_normal_form(IntMatrix m);

// Augmented boundary matrices: result[k] is d_k : C_k -> C_{k-1} for
// k = 0 .. dim(x), where C_{-1} is generated by the empty face (so d_0 is a
// single row of ones). The empty complex yields just the 1x0 augmentation.
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& x);

// Reduced simplicial homology / cohomology with integer coefficients,
// degrees -1 .. dim(x). Cohomology follows from homology by universal
// coefficients: ranks agree, torsion shifts up one degree.
AbelianGroupSequence reduced_homology(const SimplicialComplex& x);
AbelianGroupSequence reduced_cohomology(const SimplicialComplex& x);
AbelianGroupSequence cohomology_from_homology(const AbelianGroupSequence& h);

// Tensor and torsion products of finitely generated abelian groups, with the
// result renormalized to invariant-factor form.
AbelianGroup tensor_product(const AbelianGroup& g, const AbelianGroup& h);
AbelianGroup torsion_product(const AbelianGroup& g, const AbelianGroup& h);

// Reduced homology of a join from the factors' reduced homology:
//   H~_k(X*Y) = sum_{i+j=k-1} H~_i(X) (x) H~_j(Y)
//             + sum_{i+j=k-2} Tor(H~_i(X), H~_j(Y)).
// The sequence of the empty complex (Z in degree -1) is the identity.
AbelianGroupSequence join_homology(const AbelianGroupSequence& x,
                                   const AbelianGroupSequence& y);

// Reduced homology of the independence complex of g, computed one connected
// component at a time and combined with join_homology; independent sets of a
// disjoint union are joins, so this matches the direct computation while
// keeping the face count per matrix small.
AbelianGroupSequence independence_homology(const Graph& g);

// Sorted list of sphere dimensions (with multiplicity) when the sequence is
// torsion-free, i.e. the reduced homology of a wedge of spheres; nullopt
// when torsion obstructs that reading. The trivial sequence gives Some([]).
std::optional<std::vector<int>> wedge_profile(const AbelianGroupSequence& h);

// Alternating face count including the empty face; equals the alternating
// sum of reduced Betti numbers.
long long reduced_euler_characteristic(const SimplicialComplex& x);

nlohmann::ordered_json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);
nlohmann::ordered_json sequence_to_json(const AbelianGroupSequence& h);
AbelianGroupSequence sequence_from_json(const nlohmann::json& j);

}  // namespace khadeq

#endif
