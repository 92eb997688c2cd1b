#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gk/groups.hpp"
#include "gk/oracle/matrix.hpp"

namespace gk::oracle {

/// Generator data for one group, either matrices over a small field or
/// permutations. `projective` marks that enumeration should identify scalar
/// multiples (the label then names the central quotient).
struct Presentation {
  GroupId label;
  bool is_perm = false;
  int q = 0;
  int dim = 0;
  bool projective = false;
  std::vector<Mat> mat_gens;
  std::vector<Perm> perm_gens;
  Int expected_order = 0;  // of the enumerated object; 0 = sampling only
  std::string provenance;

  const GF& field() const { return GF::get(q); }
};

/// Constructs the presentation for one of the shipped groups; throws for
/// groups without one.
Presentation build_presentation(const GroupId& g);
bool has_presentation(const GroupId& g);

/// Labels of every shipped presentation.
std::vector<GroupId> shipped_presentations();

void save_presentation(const Presentation& p, const std::string& path);
Presentation load_presentation(const std::string& path);

/// Loads from the data directory when present, else builds in memory.
Presentation presentation_for(const GroupId& g);

/// File name used under data/presentations for a label.
std::string presentation_filename(const GroupId& g);

// ---- quadratic / hermitian spaces (exposed for tests and the engine) --------

struct Vec {
  uint8_t dim = 0;
  std::array<uint8_t, kMaxDim> c{};
};

struct QuadSpace {
  const GF* F = nullptr;
  int dim = 0;
  int eps = 0;  // +1 / -1, 0 for odd dim
  Mat upper;    // Q(x) = x^T U x

  uint8_t Q(const Vec& v) const;
  uint8_t B(const Vec& x, const Vec& y) const;  // polarization
  bool preserves_Q(const Mat& g) const;
};

QuadSpace make_quadratic_space(int dim, int q, int eps);

/// x -> x + B(x,v) u - B(x,u) v - Q(v) B(x,u) u for singular u, v in u-perp;
/// lies in Omega.
Mat eichler(const QuadSpace& S, const Vec& u, const Vec& v);

/// Hermitian form x^T J conj(y) with antidiagonal J over GF(q^2).
struct HermSpace {
  const GF* F = nullptr;  // GF(q^2)
  int dim = 0;
  uint8_t h(const Vec& x, const Vec& y) const;
  bool preserves_h(const Mat& g) const;
  bool isotropic(const Vec& v) const { return h(v, v) == 0; }
};

HermSpace make_hermitian_space(int dim, int q2);

/// Totally isotropic 2-space of the U_4(2) hermitian geometry, used to cut
/// the parabolic P_2 out of the enumerated group.
std::pair<Vec, Vec> u42_isotropic_plane();

}  // namespace gk::oracle
