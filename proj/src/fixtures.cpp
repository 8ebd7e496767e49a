#include "sasver/fixtures.hpp"

#include "sasver/model.hpp"

namespace sasver {

namespace {

// Contact structure on R^5 in coordinates (x1,x2,y1,y2,z):
// eta = (dz - y1 dx1 - y2 dx2)/2, xi = 2 d/dz,
// phi dx_i = -dy_i, phi dy_i = dx_i + y_i dz, phi dz = 0,
// g = eta (x) eta + (dx1^2+dx2^2+dy1^2+dy2^2)/4.
const char* kSourceR5 =
    "[source]\n"
    "vars = x1 x2 y1 y2 z\n"
    "g[1][1] = 1/4 + y1^2/4\n"
    "g[1][2] = y1*y2/4\n"
    "g[1][5] = -y1/4\n"
    "g[2][2] = 1/4 + y2^2/4\n"
    "g[2][5] = -y2/4\n"
    "g[3][3] = 1/4\n"
    "g[4][4] = 1/4\n"
    "g[5][5] = 1/4\n"
    "[structure]\n"
    "phi[3][1] = -1\n"
    "phi[4][2] = -1\n"
    "phi[1][3] = 1\n"
    "phi[5][3] = y1\n"
    "phi[2][4] = 1\n"
    "phi[5][4] = y2\n"
    "xi[5] = 2\n"
    "eta[1] = -y1/2\n"
    "eta[2] = -y2/2\n"
    "eta[5] = 1/2\n";

// Same structure with the overall 1/4 applied to the eta (x) eta term as
// well; then g(xi,xi) = 1/4 while eta(xi) = 1, so eta is no longer g-dual
// to xi. Kept as a negative fixture.
const char* kSourceR5Printed =
    "[source]\n"
    "vars = x1 x2 y1 y2 z\n"
    "g[1][1] = 1/4 + y1^2/16\n"
    "g[1][2] = y1*y2/16\n"
    "g[1][5] = -y1/16\n"
    "g[2][2] = 1/4 + y2^2/16\n"
    "g[2][5] = -y2/16\n"
    "g[3][3] = 1/4\n"
    "g[4][4] = 1/4\n"
    "g[5][5] = 1/16\n"
    "[structure]\n"
    "phi[3][1] = -1\n"
    "phi[4][2] = -1\n"
    "phi[1][3] = 1\n"
    "phi[5][3] = y1\n"
    "phi[2][4] = 1\n"
    "phi[5][4] = y2\n"
    "xi[5] = 2\n"
    "eta[1] = -y1/2\n"
    "eta[2] = -y2/2\n"
    "eta[5] = 1/2\n";

// The same family on R^7, coordinates (x1,x2,x3,y1,y2,y3,z).
const char* kSourceR7 =
    "[source]\n"
    "vars = x1 x2 x3 y1 y2 y3 z\n"
    "g[1][1] = 1/4 + y1^2/4\n"
    "g[1][2] = y1*y2/4\n"
    "g[1][3] = y1*y3/4\n"
    "g[1][7] = -y1/4\n"
    "g[2][2] = 1/4 + y2^2/4\n"
    "g[2][3] = y2*y3/4\n"
    "g[2][7] = -y2/4\n"
    "g[3][3] = 1/4 + y3^2/4\n"
    "g[3][7] = -y3/4\n"
    "g[4][4] = 1/4\n"
    "g[5][5] = 1/4\n"
    "g[6][6] = 1/4\n"
    "g[7][7] = 1/4\n"
    "[structure]\n"
    "phi[4][1] = -1\n"
    "phi[5][2] = -1\n"
    "phi[6][3] = -1\n"
    "phi[1][4] = 1\n"
    "phi[7][4] = y1\n"
    "phi[2][5] = 1\n"
    "phi[7][5] = y2\n"
    "phi[3][6] = 1\n"
    "phi[7][6] = y3\n"
    "xi[7] = 2\n"
    "eta[1] = -y1/2\n"
    "eta[2] = -y2/2\n"
    "eta[3] = -y3/2\n"
    "eta[7] = 1/2\n";

// (x1,x2,y1,y2,z) -> (x1+y1, x2+y2) onto flat R^2 scaled by 1/8. The fiber
// contains xi; phi(ker) is the whole horizontal space.
const char* kExample2Tail =
    "[target]\n"
    "vars = u1 u2\n"
    "g[1][1] = 1/8\n"
    "g[2][2] = 1/8\n"
    "[map]\n"
    "F[1] = x1 + y1\n"
    "F[2] = x2 + y2\n";

// (x1,x2,y1,y2,z) -> (x1+y1, x2+y2, y1^2/2+y2^2/2+z) with a curved target
// metric written in the first two target coordinates; xi is horizontal.
// Guard keeps the target metric positive definite.
const char* kExample3Tail =
    "[target]\n"
    "vars = y1 y2 u3\n"
    "g[1][1] = 1/8\n"
    "g[1][2] = y1*y2/8\n"
    "g[1][3] = -y1/8\n"
    "g[2][2] = 1/8\n"
    "g[2][3] = -y2/8\n"
    "g[3][3] = 1/4\n"
    "[map]\n"
    "F[1] = x1 + y1\n"
    "F[2] = x2 + y2\n"
    "F[3] = y1^2/2 + y2^2/2 + z\n"
    "guard = 2 - (x1 + y1)^2 - (x2 + y2)^2\n";

// (x1,..,y3,z) -> R^5 analogue of example3; xi horizontal, mu is
// 3-dimensional. Guards: the published quartic exclusion plus the two
// remaining leading-minor conditions of the target metric, composed with
// the map so that sampled source points have positive definite images.
const char* kExample4Tail =
    "[target]\n"
    "vars = y1 y2 u3 y3 u5\n"
    "g[1][1] = 1/8\n"
    "g[1][2] = y1*y2/8\n"
    "g[1][3] = -y1/8\n"
    "g[1][4] = y1*y3/8\n"
    "g[2][2] = 1/8\n"
    "g[2][3] = -y2/8\n"
    "g[2][4] = y2*y3/8\n"
    "g[3][3] = 1/4\n"
    "g[3][4] = -y3/8\n"
    "g[4][4] = 1/8\n"
    "g[5][5] = 1/8\n"
    "[map]\n"
    "F[1] = x1 + y1\n"
    "F[2] = x2 + y2\n"
    "F[3] = y1^2/2 + y2^2/2 + y3^2/2 + z\n"
    "F[4] = x3 + y3\n"
    "F[5] = x3 - y3\n"
    "guard = 2 - (x1 + y1)^2 - (x2 + y2)^2 - (x3 + y3)^2"
    " + (x1 + y1)^2*(x2 + y2)^2*(x3 + y3)^2\n"
    "guard = 1 - (x1 + y1)^2*(x2 + y2)^2\n"
    "guard = 2 - (x1 + y1)^2 - (x2 + y2)^2\n";

// Orthogonal projection of flat R^2 onto flat R^1: every tensor vanishes.
const char* kFlatR2R1 =
    "[source]\n"
    "vars = x y\n"
    "g[1][1] = 1\n"
    "g[2][2] = 1\n"
    "[target]\n"
    "vars = u\n"
    "g[1][1] = 1\n"
    "[map]\n"
    "F[1] = x\n";

// Structure-free control built as a genuine submersion: horizontal lift of
// (d_u, d_v) is (d_x, d_y + x d_z), fiber scale 1+x^2. Nonzero A (the lift
// does not commute) and nonzero T (fiber length varies with x).
const char* kPolyR3R2 =
    "[source]\n"
    "vars = x y z\n"
    "g[1][1] = 1\n"
    "g[2][2] = (1 + x^2)^2\n"
    "g[2][3] = -x - x^3\n"
    "g[3][3] = 1 + x^2\n"
    "[target]\n"
    "vars = u v\n"
    "g[1][1] = 1\n"
    "g[2][2] = 1 + u^2\n"
    "[map]\n"
    "F[1] = x\n"
    "F[2] = y\n";

}  // namespace

std::vector<std::string> fixture_names() {
  return {"example1", "example1-r7", "example1-printed", "example2",
          "example3", "example4",    "flat-r2-r1",       "poly-r3-r2"};
}

bool is_fixture(const std::string& name) {
  for (const auto& n : fixture_names())
    if (n == name) return true;
  return false;
}

std::string fixture_text(const std::string& name) {
  if (name == "example1") return kSourceR5;
  if (name == "example1-r7") return kSourceR7;
  if (name == "example1-printed") return kSourceR5Printed;
  if (name == "example2") return std::string(kSourceR5) + kExample2Tail;
  if (name == "example3") return std::string(kSourceR5) + kExample3Tail;
  if (name == "example4") return std::string(kSourceR7) + kExample4Tail;
  if (name == "flat-r2-r1") return kFlatR2R1;
  if (name == "poly-r3-r2") return kPolyR3R2;
  throw ModelError("unknown fixture '" + name + "'");
}

SubmersionSpec load_fixture(const std::string& name) {
  return load_model(fixture_text(name), name);
}

}  // namespace sasver
