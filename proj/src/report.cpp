#include "qdq/report.hpp"

namespace qdq {

void Report::absorb(Report child) {
  if (children.empty() && !witness) pass = true;
  if (!child.pass && pass) {
    Witness w = child.witness.value_or(Witness{});
    w.detail = child.check + (w.detail.empty() ? "" : ": " + w.detail);
    fail(std::move(w));
  }
  children.push_back(std::move(child));
}

Report compare_matrices(std::string check, const Matrix& lhs, const Matrix& rhs) {
  Stopwatch sw;
  Report r;
  r.check = std::move(check);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.fail("shape mismatch");
  } else if (auto at = first_mismatch(lhs, rhs)) {
    r.fail(Witness{{at->first, at->second}, lhs(at->first, at->second), rhs(at->first, at->second),
                   "entry (" + std::to_string(at->first) + ", " + std::to_string(at->second) + ") differs"});
  } else {
    r.succeed();
  }
  r.ms = sw.ms();
  return r;
}

}  // namespace qdq
