#include "fractal/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "fractal/error.hpp"

namespace fractal::io {

namespace {

using cd = std::complex<double>;

void require_schema(const json& j, const char* expected) {
  if (!j.is_object() || !j.contains("schema_version")) throw SchemaError("missing schema_version");
  const auto& v = j.at("schema_version");
  if (!v.is_string() || v.get<std::string>() != expected) {
    throw SchemaError("unsupported schema_version " + v.dump() + ", expected \"" + expected + "\"");
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("field '") + key + "' has the wrong type");
  }
}

json complex_to_json(cd z) { return json::array({z.real(), z.imag()}); }

cd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SchemaError("complex value must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Matrix, class Convert>
Matrix matrix_from_json(const json& j, const char* name, Eigen::Index rows, Eigen::Index cols,
                        Convert convert) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
    throw ShapeError(std::string(name) + " must have " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ShapeError(std::string(name) + " rows must have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = convert(row[k]);
  }
  return m;
}

double real_from_json(const json& j) {
  if (!j.is_number()) throw SchemaError("expected a number");
  return j.get<double>();
}

Eigen::MatrixXd real_matrix(const json& j, const char* name, Eigen::Index rows, Eigen::Index cols) {
  return matrix_from_json<Eigen::MatrixXd>(j, name, rows, cols, real_from_json);
}

Eigen::MatrixXcd complex_matrix(const json& j, const char* name, Eigen::Index rows,
                                Eigen::Index cols) {
  return matrix_from_json<Eigen::MatrixXcd>(j, name, rows, cols, complex_from_json);
}

Eigen::Index columns_of(const json& j) {
  return j.is_array() && !j.empty() && j[0].is_array() ? static_cast<Eigen::Index>(j[0].size()) : 0;
}

Eigen::VectorXcd complex_vector(const json& j, const char* name, Eigen::Index size) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != size) {
    throw ShapeError(std::string(name) + " must have " + std::to_string(size) + " entries");
  }
  Eigen::VectorXcd v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = complex_from_json(j[i]);
  return v;
}

json vector_to_json(const Eigen::VectorXcd& v) {
  json a = json::array();
  for (const cd& z : v) a.push_back(complex_to_json(z));
  return a;
}

std::vector<double> split_row(const std::string& line, int line_no) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    while (end && (*end == ' ' || *end == '\r' || *end == '\t')) ++end;
    if (end == begin || *end != '\0') {
      throw ShapeError("input CSV line " + std::to_string(line_no) + ": malformed value '" + cell + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

json operators_to_json(const HippoOperators& op) {
  json a = json::array();
  for (int n = 0; n < op.N; ++n) {
    for (int k = 0; k < op.N; ++k) a.push_back(op.A(n, k));
  }
  json b = json::array();
  for (int n = 0; n < op.N; ++n) b.push_back(op.B(n));
  return {{"schema_version", kOperatorSchema}, {"alpha", op.alpha}, {"n", op.N},
          {"a", std::move(a)}, {"b", std::move(b)}, {"quadrature_order", op.quadrature_order}};
}

HippoOperators operators_from_json(const json& j) {
  require_schema(j, kOperatorSchema);
  HippoOperators op;
  op.alpha = get<double>(j, "alpha");
  op.N = get<int>(j, "n");
  op.quadrature_order = get<int>(j, "quadrature_order");
  if (op.N < 1) throw ShapeError("operator size n must be >= 1");
  const auto a = get<std::vector<double>>(j, "a");
  const auto b = get<std::vector<double>>(j, "b");
  if (a.size() != static_cast<std::size_t>(op.N) * op.N) throw ShapeError("a must have n*n entries");
  if (b.size() != static_cast<std::size_t>(op.N)) throw ShapeError("b must have n entries");
  op.A.resize(op.N, op.N);
  op.B.resize(op.N);
  for (int n = 0; n < op.N; ++n) {
    op.B(n) = b[n];
    for (int k = 0; k < op.N; ++k) op.A(n, k) = a[static_cast<std::size_t>(n) * op.N + k];
  }
  return op;
}

json spectral_to_json(const SpectralInit& init) {
  return {{"schema_version", kSpectralSchema}, {"alpha", init.alpha},       {"n", init.N},
          {"lambda", vector_to_json(init.lambda)}, {"v", matrix_to_json(init.V)},
          {"v_inv", matrix_to_json(init.V_inv)},  {"b_tilde", matrix_to_json(init.B_tilde)},
          {"cond_v", init.cond_V}};
}

SpectralInit spectral_from_json(const json& j) {
  require_schema(j, kSpectralSchema);
  SpectralInit init;
  init.alpha = get<double>(j, "alpha");
  init.N = get<int>(j, "n");
  if (init.N < 1) throw ShapeError("state size n must be >= 1");
  init.cond_V = get<double>(j, "cond_v");
  init.lambda = complex_vector(field(j, "lambda"), "lambda", init.N);
  init.V = real_matrix(field(j, "v"), "v", init.N, init.N);
  init.V_inv = real_matrix(field(j, "v_inv"), "v_inv", init.N, init.N);
  const json& bt = field(j, "b_tilde");
  const Eigen::Index U = columns_of(bt);
  if (U < 1) throw ShapeError("b_tilde must have at least one column");
  init.B_tilde = complex_matrix(bt, "b_tilde", init.N, U);
  return init;
}

json ssm_to_json(const DiscreteDiagonalSSM& ssm) {
  return {{"schema_version", kSsmSchema}, {"delta", ssm.delta}, {"n", ssm.state_dim()},
          {"lambda_bar", vector_to_json(ssm.lambda_bar)}, {"b_bar", matrix_to_json(ssm.b_bar)}};
}

DiscreteDiagonalSSM ssm_from_json(const json& j) {
  require_schema(j, kSsmSchema);
  DiscreteDiagonalSSM ssm;
  ssm.delta = get<double>(j, "delta");
  const int N = get<int>(j, "n");
  if (N < 1) throw ShapeError("state size n must be >= 1");
  ssm.lambda_bar = complex_vector(field(j, "lambda_bar"), "lambda_bar", N);
  const json& bb = field(j, "b_bar");
  const Eigen::Index U = columns_of(bb);
  if (U < 1) throw ShapeError("b_bar must have at least one column");
  ssm.b_bar = complex_matrix(bb, "b_bar", N, U);
  return ssm;
}

json model_to_json(const Model& model) {
  const FilterBankConfig& c = model.config;
  json config = {{"k", c.K},
                 {"block_state", c.block_state},
                 {"input_width", c.input_width},
                 {"output_width", c.output_width},
                 {"alphas", c.alphas},
                 {"delta", c.delta}};
  json channels = json::array();
  for (const SpectralInit& init : model.channels) {
    json ch = spectral_to_json(init);
    ch.erase("schema_version");
    channels.push_back(std::move(ch));
  }
  const LayerWeights& w = model.weights;
  json weights = {{"c_tilde", matrix_to_json(w.C_tilde)},
                  {"w_out", matrix_to_json(w.W_out)},
                  {"w_gate", matrix_to_json(w.W_gate)},
                  {"d", matrix_to_json(w.D)}};
  return {{"schema_version", kModelSchema}, {"config", std::move(config)},
          {"channels", std::move(channels)}, {"weights", std::move(weights)}};
}

Model model_from_json(const json& j) {
  require_schema(j, kModelSchema);
  Model m;
  const json& c = field(j, "config");
  m.config.K = get<int>(c, "k");
  m.config.block_state = get<int>(c, "block_state");
  m.config.input_width = get<int>(c, "input_width");
  m.config.output_width = get<int>(c, "output_width");
  m.config.alphas = get<std::vector<double>>(c, "alphas");
  m.config.delta = get<std::vector<double>>(c, "delta");
  m.config.validate();

  const json& channels = field(j, "channels");
  if (!channels.is_array() || static_cast<int>(channels.size()) != m.config.K) {
    throw ShapeError("channels must have k entries");
  }
  for (const json& ch : channels) {
    json tagged = ch;
    tagged["schema_version"] = kSpectralSchema;
    SpectralInit init = spectral_from_json(tagged);
    if (init.N != m.config.block_state) throw ShapeError("channel state size must equal block_state");
    if (init.input_width() != m.config.input_width) throw ShapeError("channel b_tilde width must equal input_width");
    m.channels.push_back(std::move(init));
  }

  const json& w = field(j, "weights");
  const int M = m.config.output_width;
  const int U = m.config.input_width;
  m.weights.C_tilde = complex_matrix(field(w, "c_tilde"), "c_tilde", M, m.config.total_state());
  m.weights.W_out = real_matrix(field(w, "w_out"), "w_out", M, M);
  m.weights.W_gate = real_matrix(field(w, "w_gate"), "w_gate", M, U);
  m.weights.D = real_matrix(field(w, "d"), "d", M, U);
  m.weights.validate(m.config);
  return m;
}

json report_to_json(const OracleReport& r) {
  json detail = json::array();
  for (const auto& row : r.detail) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string key = i < r.columns.size() ? r.columns[i] : "c" + std::to_string(i);
      // JSON has no infinities; non-finite values become null.
      obj[key] = std::isfinite(row[i]) ? json(row[i]) : json(nullptr);
    }
    detail.push_back(std::move(obj));
  }
  json out = {{"name", r.name},
              {"max_deviation", std::isfinite(r.max_deviation) ? json(r.max_deviation) : json(nullptr)},
              {"tolerance", r.tolerance},
              {"passed", r.passed},
              {"detail", std::move(detail)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json reports_to_json(std::span<const OracleReport> reports) {
  json checks = json::array();
  bool all = true;
  for (const auto& r : reports) {
    checks.push_back(report_to_json(r));
    all = all && r.passed;
  }
  return {{"passed", all}, {"checks", std::move(checks)}};
}

std::string format_reports(std::span<const OracleReport> reports) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  os << std::left << std::setw(static_cast<int>(width)) << "check"
     << "  status  max_deviation  tolerance\n";
  int failed = 0;
  for (const auto& r : reports) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %-6s  %13.6e  %9.3e", r.passed ? "PASS" : "FAIL",
                  r.max_deviation, r.tolerance);
    os << std::left << std::setw(static_cast<int>(width)) << r.name << buf;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
    failed += !r.passed;
  }
  os << reports.size() - failed << "/" << reports.size() << " checks passed\n";
  return os.str();
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string table_to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

SequenceBatch parse_input_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::vector<double>> rows;
  int columns = -1;
  bool has_time = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (columns < 0) {
      // Header row.
      std::vector<std::string> names;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) names.push_back(cell);
      has_time = !names.empty() && names[0] == "t";
      columns = static_cast<int>(names.size());
      if (columns - (has_time ? 1 : 0) < 1) throw ShapeError("input CSV has no signal columns");
      continue;
    }
    auto row = split_row(line, line_no);
    if (static_cast<int>(row.size()) != columns) {
      throw ShapeError("input CSV line " + std::to_string(line_no) + " has " +
                       std::to_string(row.size()) + " values, header has " + std::to_string(columns));
    }
    rows.push_back(std::move(row));
  }
  if (columns < 0) throw ShapeError("input CSV is empty");
  const int offset = has_time ? 1 : 0;
  SequenceBatch u;
  u.values.resize(static_cast<Eigen::Index>(rows.size()), columns - offset);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = offset; c < columns; ++c) u.values(static_cast<Eigen::Index>(r), c - offset) = rows[r][c];
  }
  if (!u.values.allFinite()) throw NumericError("input CSV contains non-finite values");
  return u;
}

std::string output_to_csv(const SequenceBatch& z) {
  std::string out = "t";
  for (int m = 0; m < z.width(); ++m) out += ",z_" + std::to_string(m);
  out += '\n';
  for (int k = 0; k < z.length(); ++k) {
    out += std::to_string(k);
    for (int m = 0; m < z.width(); ++m) out += ',' + format_double(z.values(k, m));
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace fractal::io
