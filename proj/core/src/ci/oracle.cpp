#include "snap/ci/testers.hpp"

namespace snap::ci {

bool OracleTester::evaluate(Vertex x, Vertex y, std::span<const Vertex> s) {
  return d_separated(dag_, x, y, s);
}

}  // namespace snap::ci
