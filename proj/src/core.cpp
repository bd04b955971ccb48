#include "nbody/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace nbody {

std::string to_string(Statistics s) { return s == Statistics::Bose ? "bose" : "fermi"; }

Statistics parse_statistics(const std::string& name) {
  if (name == "bose" || name == "Bose") return Statistics::Bose;
  if (name == "fermi" || name == "Fermi") return Statistics::Fermi;
  throw std::invalid_argument("unknown statistics '" + name + "' (expected bose or fermi)");
}

void SystemParams::validate() const {
  if (n_particles < 2) throw std::invalid_argument("n_particles must be >= 2");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be > 0");
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("omega must be > 0");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be > 0");
}

SystemParams SystemParams::natural(int n_particles, int dimension) {
  SystemParams p;
  p.n_particles = n_particles;
  p.dimension = dimension;
  p.validate();
  return p;
}

double effective_frequency(const SystemParams& params) {
  return std::sqrt(static_cast<double>(params.n_particles)) * params.omega;
}

double reduced_mass(int i, const SystemParams& params) {
  if (i < 1 || i > params.n_particles - 1) {
    throw std::out_of_range("reduced_mass: Jacobi index " + std::to_string(i) +
                            " outside 1.." + std::to_string(params.n_particles - 1));
  }
  return static_cast<double>(i) / static_cast<double>(i + 1) * params.mass;
}

double relative_length_scale(const SystemParams& params) {
  return std::sqrt(params.hbar / (params.mass * effective_frequency(params)));
}

void check_configuration(const Configuration& c, const SystemParams& params) {
  if (c.rows() != params.n_particles || c.cols() != params.dimension) {
    std::ostringstream msg;
    msg << "configuration is " << c.rows() << "x" << c.cols() << ", expected "
        << params.n_particles << "x" << params.dimension;
    throw std::invalid_argument(msg.str());
  }
  if (!c.allFinite()) throw std::invalid_argument("configuration has non-finite entries");
}

double LogAmplitude::value() const {
  return sign == 0 ? 0.0 : static_cast<double>(sign) * std::exp(log_abs);
}

// -- Permutation -------------------------------------------------------------

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<char> seen(map_.size(), 0);
  for (int v : map_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: mapping is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  std::swap(p.map_.at(static_cast<std::size_t>(a)), p.map_.at(static_cast<std::size_t>(b)));
  return p;
}

int Permutation::sign() const {
  std::vector<char> visited(map_.size(), 0);
  int parity = 0;
  for (std::size_t start = 0; start < map_.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t j = start; !visited[j]; j = static_cast<std::size_t>(map_[j])) {
      visited[j] = 1;
      ++len;
    }
    parity ^= static_cast<int>((len - 1) & 1U);
  }
  return parity ? -1 : 1;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> m(map_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = other.map_[static_cast<std::size_t>(map_[i])];
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> m(map_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  return Permutation(std::move(m));
}

int permutation_sign(const Permutation& p) { return p.sign(); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

// -- CSV ingestion -------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Parses a comma-separated row of decimal floats. Returns false if any field
// is not a number.
bool parse_row(const std::string& line, std::vector<double>& out) {
  out.clear();
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    field = trim(field);
    if (field.empty()) return false;
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) return false;
    out.push_back(v);
  }
  if (!line.empty() && line.back() == ',') return false;
  return !out.empty();
}

}  // namespace

Configuration read_configuration_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::vector<double> values;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!parse_row(line, values)) {
      if (rows.empty() && line_no == 1) continue;  // header
      throw std::runtime_error("configuration CSV: malformed row at line " + std::to_string(line_no));
    }
    if (!rows.empty() && values.size() != rows.front().size()) {
      throw std::runtime_error("configuration CSV: inconsistent column count at line " +
                               std::to_string(line_no));
    }
    rows.push_back(values);
  }
  if (rows.empty()) throw std::runtime_error("configuration CSV: no data rows");
  Configuration c(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t a = 0; a < rows[i].size(); ++a)
      c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) = rows[i][a];
  if (!c.allFinite()) throw std::runtime_error("configuration CSV: non-finite value");
  return c;
}

Configuration read_configuration_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_configuration_csv(in);
}

std::vector<Configuration> read_configuration_batch(std::istream& in, int n_particles,
                                                    int dimension) {
  const auto width = static_cast<std::size_t>(n_particles) * static_cast<std::size_t>(dimension);
  std::vector<Configuration> out;
  std::string line;
  std::vector<double> values;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!parse_row(line, values)) {
      if (out.empty() && line_no == 1) continue;  // header
      throw std::runtime_error("points CSV: malformed row at line " + std::to_string(line_no));
    }
    if (values.size() != width) {
      throw std::runtime_error("points CSV: line " + std::to_string(line_no) + " has " +
                               std::to_string(values.size()) + " values, expected " +
                               std::to_string(width) + " (N*D)");
    }
    Configuration c(n_particles, dimension);
    for (int i = 0; i < n_particles; ++i)
      for (int a = 0; a < dimension; ++a)
        c(i, a) = values[static_cast<std::size_t>(i * dimension + a)];
    if (!c.allFinite()) {
      throw std::runtime_error("points CSV: non-finite value at line " + std::to_string(line_no));
    }
    out.push_back(std::move(c));
  }
  return out;
}

// -- Threads ---------------------------------------------------------------------

unsigned worker_count() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NBODY_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace nbody
