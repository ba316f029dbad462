#include "schubert/flags.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace schubert {

Flag::Flag(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  if (n == 0) throw std::invalid_argument("flag matrix is empty");
  for (const auto& row : matrix_)
    if (row.size() != n) throw std::invalid_argument("flag matrix is not square");
  for (auto& row : matrix_)
    for (auto& v : row) v.canonicalize();
  if (determinant(matrix_) == 0) throw std::invalid_argument("flag matrix is singular");
}

mpq_class determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpq_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  mpq_class det = m[n - 1][n - 1];
  return sign > 0 ? det : mpq_class(-det);
}

mpq_class plucker_coordinate(const Flag& x, const std::vector<int>& rows) {
  const int k = static_cast<int>(rows.size());
  if (k < 1 || k >= x.n()) throw std::invalid_argument("Pluecker index size must lie in [1, n-1]");
  RationalMatrix sub(k, std::vector<mpq_class>(k));
  for (int a = 0; a < k; ++a) {
    if (rows[a] < 1 || rows[a] > x.n()) throw std::invalid_argument("row index out of range");
    for (int b = 0; b < k; ++b) sub[a][b] = x.at(rows[a] - 1, b);
  }
  return determinant(std::move(sub));
}

Flag coordinate_flag(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  RationalMatrix m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t col = 0; col < n; ++col) m[perm[col] - 1][col] = 1;
  return Flag(std::move(m));
}

VanishingPattern vanishing_pattern(const PluckerSystem& ps, const Flag& x) {
  if (ps.group().type_a_n() != x.n()) throw std::invalid_argument("flag size does not match the group");
  VanishingPattern b;
  b.bits.resize(ps.size());
  for (std::size_t k = 0; k < ps.size(); ++k) b.bits[k] = plucker_coordinate(x, ps.subset(k)) != 0;
  return b;
}

Flag random_cell_point(const PluckerSystem& ps, const WeylElement& w, std::uint64_t seed) {
  const auto perm = ps.group().to_permutation(w);
  const int n = static_cast<int>(perm.size());
  const auto target = generic_pattern(ps, w);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-1000, 999);
  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    RationalMatrix u(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) {
      u[i][i] = 1;
      for (int j = i + 1; j < n; ++j) {
        int v = entry(rng);
        u[i][j] = v >= 0 ? v + 1 : v;
      }
    }
    RationalMatrix m(n, std::vector<mpq_class>(n));
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) m[row][col] = u[row][perm[col] - 1];
    Flag x(std::move(m));
    if (vanishing_pattern(ps, x) == target) return x;
  }
  throw std::runtime_error("random_cell_point: no generic sample after retries");
}

namespace {

mpq_class parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  if (v.is_string()) {
    mpq_class q;
    if (q.set_str(v.get<std::string>(), 10) != 0) throw std::invalid_argument("malformed rational '" + v.get<std::string>() + "'");
    q.canonicalize();
    return q;
  }
  throw std::invalid_argument("flag entries must be integers or \"p/q\" strings");
}

}  // namespace

Flag parse_flag_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  if (doc.is_object()) doc = doc.at("matrix");
  if (!doc.is_array()) throw std::invalid_argument("flag JSON must be a list of rows");
  RationalMatrix m;
  for (const auto& row : doc) {
    std::vector<mpq_class> r;
    for (const auto& v : row) r.push_back(parse_rational(v));
    m.push_back(std::move(r));
  }
  return Flag(std::move(m));
}

Flag parse_flag_csv(const std::string& text) {
  RationalMatrix m;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<mpq_class> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::string trimmed;
      for (char c : cell)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
      mpq_class q;
      if (trimmed.empty() || q.set_str(trimmed, 10) != 0)
        throw std::invalid_argument("malformed rational '" + cell + "'");
      q.canonicalize();
      row.push_back(q);
    }
    m.push_back(std::move(row));
  }
  return Flag(std::move(m));
}

Flag load_flag(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return parse_flag_csv(ss.str());
  return parse_flag_json(ss.str());
}

std::string flag_to_json(const Flag& x) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : x.matrix()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  return rows.dump();
}

}  // namespace schubert
