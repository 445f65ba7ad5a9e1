#include "kspec/matrix_io.hpp"

#include <fstream>
#include <iomanip>

#include "kspec/errors.hpp"

namespace kspec {

nlohmann::json matrix_to_json(const ComplexMatrix& A) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < A.cols(); ++j) row.push_back({A(i, j).real(), A(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"n", A.rows()}, {"rows", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    const auto& rows = doc.at("rows");
    if (n < 1 || !rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw InputError("matrix file: 'rows' must hold n rows");
    }
    ComplexMatrix A(n, n);
    for (int i = 0; i < n; ++i) {
      const auto& row = rows.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw InputError("matrix file: row " + std::to_string(i) + " must hold n entries");
      }
      for (int j = 0; j < n; ++j) {
        const auto& entry = row.at(static_cast<std::size_t>(j));
        if (!entry.is_array() || entry.size() != 2) {
          throw InputError("matrix file: entries must be [re, im] pairs");
        }
        A(i, j) = cplx(entry[0].get<double>(), entry[1].get<double>());
      }
    }
    require_square_finite(A, "matrix file");
    return A;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("matrix file: ") + e.what());
  }
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("matrix file '" + path + "': " + e.what());
  }
  return matrix_from_json(doc);
}

void write_matrix_file(const std::string& path, const ComplexMatrix& A) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write matrix file '" + path + "'");
  out << std::setprecision(17) << matrix_to_json(A).dump(2) << '\n';
}

}  // namespace kspec
