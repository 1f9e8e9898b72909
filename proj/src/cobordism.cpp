#include "ctsurg/cobordism.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ctsurg {

Cobordism make_cobordism(IntMatrix Q, IntVector rot, int plus_count) {
  if (Q.rows() != Q.cols()) throw input_error("linking matrix must be square");
  if (Q.rows() != rot.rows())
    throw input_error("rotation vector length must equal the matrix dimension");
  if (plus_count < 0) throw input_error("plus-count must be non-negative");
  for (Eigen::Index i = 0; i < Q.rows(); ++i)
    for (Eigen::Index j = i + 1; j < Q.cols(); ++j)
      if (Q(i, j) != Q(j, i)) throw input_error("linking matrix must be symmetric");
  return Cobordism{std::move(Q), std::move(rot), plus_count};
}

namespace {
i64 next_int(std::istream& in, const char* what) {
  i64 v;
  if (!(in >> v)) throw input_error(std::string("diagram file: expected integer for ") + what);
  return v;
}
}  // namespace

Cobordism read_diagram(std::istream& in) {
  i64 m = next_int(in, "dimension");
  if (m < 0 || m > 4096) throw input_error("diagram file: unreasonable dimension");
  IntMatrix Q(m, m);
  for (i64 i = 0; i < m; ++i)
    for (i64 j = 0; j < m; ++j) Q(i, j) = next_int(in, "matrix entry");
  IntVector rot(m);
  for (i64 i = 0; i < m; ++i) rot(i) = next_int(in, "rotation number");
  i64 plus = next_int(in, "plus-count");
  if (plus < 0 || plus > m) throw input_error("diagram file: plus-count out of range");
  return make_cobordism(std::move(Q), std::move(rot), static_cast<int>(plus));
}

Cobordism read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open diagram file '" + path + "'");
  return read_diagram(in);
}

void write_diagram(std::ostream& out, const Cobordism& cob) {
  const Eigen::Index m = cob.handles();
  out << m << "\n";
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) out << (j ? " " : "") << cob.Q(i, j);
    out << "\n";
  }
  for (Eigen::Index i = 0; i < m; ++i) out << (i ? " " : "") << cob.rot(i);
  out << "\n" << cob.plus_count << "\n";
}

}  // namespace ctsurg
