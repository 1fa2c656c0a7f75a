#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "haarcay/group.hpp"

namespace haarcay {

struct FamilySpec;

/// Z_n, generator "a".
struct CyclicSpec {
  int n = 1;
};
/// D_{2n} = <a,b | a^n = b^2 = 1, a^b = a^-1>.
struct DihedralSpec {
  int n = 1;
};
/// Q_8 with generators "i", "j" (i^2 = j^2, j^-1 i j = i^-1).
struct QuaternionSpec {};
/// M_p(m,n) = <a,b,c | a^{p^m} = b^{p^n} = c^p = 1, [a,b] = c = a^{p^{m-1}}>,
/// m >= 2, n >= 1.
struct MpmnSpec {
  int p = 2, m = 2, n = 1;
};
/// M_p(m,n,1) = <a,b,c | a^{p^m} = b^{p^n} = c^p = 1, [a,b] = c central>,
/// m >= n >= 1, and m + n >= 3 when p = 2.
struct Mpmn1Spec {
  int p = 3, m = 1, n = 1;
};
/// Z_p^n x| Z_{q^m}: generators "a" (first basis vector of Z_p^n) and "b",
/// with a^b given by the action matrix (column vectors: a^b = M a).
struct MillerMorenoSpec {
  int p = 2, n = 2, q = 3, m = 1;
  std::optional<std::vector<std::vector<int>>> matrix;
};
/// Finite presentation over single-letter generators; an uppercase letter
/// denotes the inverse. `letters` fixes the generator order; when empty the
/// letters are taken in order of first appearance in the relators.
struct PresentedSpec {
  int ngens = 0;
  std::vector<std::string> relators;
  std::string letters;
};
struct DirectProductSpec {
  std::vector<FamilySpec> factors;
};

struct FamilySpec {
  std::variant<CyclicSpec, DihedralSpec, QuaternionSpec, MpmnSpec, Mpmn1Spec, MillerMorenoSpec,
               PresentedSpec, DirectProductSpec>
      value;
};

/// Builds the multiplication table for a family.
///
/// Element numbering is deterministic: for the structured families elements
/// are normal forms ordered lexicographically by exponent tuple
/// (Cyclic: a^i; Dihedral: a^i b^j as (i,j); Quaternion: i^s j^t as (s,t);
/// M_p(m,n): a^i b^j as (i,j); M_p(m,n,1): a^i b^j c^k as (i,j,k);
/// Miller-Moreno: v b^j as (v_1..v_n, j); DirectProduct: tuples of factor
/// indices). Presented groups are numbered by shortlex order of the least
/// word over g_1, g_1^-1, g_2, g_2^-1, ...
///
/// Throws PreconditionError naming the violated constraint.
GroupTable build_family(const FamilySpec& spec);

/// Short human-readable name, e.g. "M_3(1,1,1)".
std::string family_name(const FamilySpec& spec);

/// Lexicographically least monic irreducible factor of degree n of
/// (x^q - 1)/(x - 1) over F_p, as coefficients c_0..c_{n-1} of
/// x^n + c_{n-1} x^{n-1} + ... + c_0; nullopt if none exists.
std::optional<std::vector<int>> cyclotomic_factor(int p, int n, int q);

bool is_prime(long long x);

/// Maximum number of cosets the presentation enumerator may define.
inline constexpr std::size_t kMaxCosets = 1u << 20;

}  // namespace haarcay
