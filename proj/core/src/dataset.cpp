#include "fastmice/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fastmice {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("dataset: " + what);
}

std::map<std::string, std::string> parse_key_values(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open manifest " + path.string());
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      fail("bad manifest line (expected key = value): " + t);
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

Index parse_index(const std::string& s, const std::string& key) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v <= 0)
    fail("key " + key + " must be a positive integer, got '" + s + "'");
  return static_cast<Index>(v);
}

// Dense CSV: one row per line, comma-separated reals.
RowMatrix read_csv(const std::filesystem::path& path, Index expect_cols) {
  std::ifstream in(path);
  if (!in) fail("missing view file " + path.string());
  std::vector<double> values;
  Index rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    Index cols = 0;
    const char* p = t.c_str();
    while (true) {
      char* end = nullptr;
      double v = std::strtod(p, &end);
      if (end == p) fail("bad number in " + path.string());
      values.push_back(v);
      ++cols;
      while (*end == ' ' || *end == '\t') ++end;
      if (*end == ',') {
        p = end + 1;
      } else if (*end == '\0') {
        break;
      } else {
        fail("unexpected character in " + path.string());
      }
    }
    if (cols != expect_cols)
      fail("dimension mismatch in " + path.string() + ": manifest declares " +
           std::to_string(expect_cols) + " columns, file row " +
           std::to_string(rows) + " has " + std::to_string(cols));
    ++rows;
  }
  RowMatrix m(rows, expect_cols);
  std::copy(values.begin(), values.end(), m.data());
  return m;
}

// Sparse coordinate text: header "N d nnz", then nnz lines "row col value"
// (0-based indices). Unlisted entries are zero.
RowMatrix read_coo(const std::filesystem::path& path, Index expect_cols) {
  std::ifstream in(path);
  if (!in) fail("missing view file " + path.string());
  Index n = 0, d = 0;
  std::int64_t nnz = 0;
  if (!(in >> n >> d >> nnz)) fail("bad sparse header in " + path.string());
  if (d != expect_cols)
    fail("dimension mismatch in " + path.string() + ": manifest declares " +
         std::to_string(expect_cols) + ", header says " + std::to_string(d));
  RowMatrix m = RowMatrix::Zero(n, d);
  for (std::int64_t e = 0; e < nnz; ++e) {
    Index r = 0, c = 0;
    double v = 0;
    if (!(in >> r >> c >> v)) fail("truncated sparse file " + path.string());
    if (r < 0 || r >= n || c < 0 || c >= d)
      fail("sparse index out of range in " + path.string());
    m(r, c) = v;
  }
  return m;
}

void write_double(std::ostream& out, double v) {
  // Shortest representation that parses back to the same bits.
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, p - buf);
  (void)ec;
}

void standardize_columns(RowMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    auto col = m.col(j);
    const double mean = col.mean();
    const double var = (col.array() - mean).square().sum() /
                       static_cast<double>(m.rows());
    const double sd = std::sqrt(var);
    if (sd > 0) {
      col = (col.array() - mean) / sd;
    } else {
      col.setZero();
    }
  }
}

}  // namespace

LoadedDataset load_dataset(const std::filesystem::path& manifest_path,
                           const LoadOptions& options) {
  auto kv = parse_key_values(manifest_path);
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) fail("manifest missing key " + key);
    return it->second;
  };

  LoadedDataset out;
  out.data.n_samples = parse_index(get("n_samples"), "n_samples");
  const Index n_views = parse_index(get("n_views"), "n_views");

  if (auto it = kv.find("metric"); it != kv.end()) {
    if (it->second == "euclidean") {
      out.metric = DistanceMetric::kEuclidean;
    } else if (it->second == "cosine") {
      out.metric = DistanceMetric::kCosine;
    } else {
      fail("unknown metric '" + it->second + "'");
    }
  }

  const auto base = manifest_path.parent_path();
  for (Index v = 0; v < n_views; ++v) {
    const std::string prefix = "view." + std::to_string(v) + ".";
    ViewMatrix view;
    view.dim = parse_index(get(prefix + "dim"), prefix + "dim");
    std::filesystem::path file = get(prefix + "file");
    if (file.is_relative()) file = base / file;
    view.name = file.filename().string();

    std::string format = "csv";
    if (auto it = kv.find(prefix + "format"); it != kv.end())
      format = it->second;
    if (format == "csv") {
      view.data = read_csv(file, view.dim);
    } else if (format == "coo") {
      view.data = read_coo(file, view.dim);
    } else {
      fail("unknown view format '" + format + "'");
    }

    if (view.data.rows() != out.data.n_samples)
      fail("row-count mismatch: view " + std::to_string(v) + " has " +
           std::to_string(view.data.rows()) + " rows, manifest declares " +
           std::to_string(out.data.n_samples));
    if (!view.data.allFinite())
      fail("non-finite value in view " + std::to_string(v));
    if (options.standardize) standardize_columns(view.data);
    if (out.metric == DistanceMetric::kCosine) {
      for (Index i = 0; i < view.data.rows(); ++i)
        if (view.data.row(i).norm() == 0.0)
          fail("cosine metric configured but view " + std::to_string(v) +
               " row " + std::to_string(i) + " has zero norm");
    }
    out.data.views.push_back(std::move(view));
  }

  if (auto it = kv.find("labels.file"); it != kv.end()) {
    std::filesystem::path file = it->second;
    if (file.is_relative()) file = base / file;
    Labels labels = read_labels(file);
    if (static_cast<Index>(labels.size()) != out.data.n_samples)
      fail("labels file has " + std::to_string(labels.size()) +
           " entries, expected " + std::to_string(out.data.n_samples));
    out.truth = std::move(labels);
  }
  return out;
}

void save_dataset(const MultiViewDataset& dataset,
                  const std::filesystem::path& dir,
                  const std::optional<Labels>& truth,
                  DistanceMetric metric) {
  std::filesystem::create_directories(dir);
  std::ofstream man(dir / "manifest.txt");
  if (!man) fail("cannot write manifest in " + dir.string());
  man << "n_samples = " << dataset.n_samples << "\n";
  man << "n_views = " << dataset.n_views() << "\n";
  man << "metric = "
      << (metric == DistanceMetric::kCosine ? "cosine" : "euclidean") << "\n";
  for (Index v = 0; v < dataset.n_views(); ++v) {
    const std::string file = "view" + std::to_string(v) + ".csv";
    man << "view." << v << ".file = " << file << "\n";
    man << "view." << v << ".dim = " << dataset.views[v].dim << "\n";
    std::ofstream out(dir / file);
    const RowMatrix& m = dataset.views[v].data;
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index j = 0; j < m.cols(); ++j) {
        if (j) out << ',';
        write_double(out, m(i, j));
      }
      out << '\n';
    }
  }
  if (truth) {
    man << "labels.file = labels.txt\n";
    write_labels(*truth, dir / "labels.txt");
  }
}

double distance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                const Eigen::Ref<const Eigen::RowVectorXd>& b,
                DistanceMetric metric) {
  if (a.size() != b.size())
    throw std::invalid_argument("distance: length mismatch");
  if (metric == DistanceMetric::kEuclidean) return (a - b).norm();
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0)
    throw std::invalid_argument("distance: zero vector under cosine");
  return std::clamp(1.0 - a.dot(b) / (na * nb), 0.0, 2.0);
}

Labels read_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open labels file " + path.string());
  Labels labels;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
      fail("bad label line '" + t + "' in " + path.string());
    labels.push_back(v);
  }
  return labels;
}

void write_labels(const Labels& labels, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail("cannot write labels file " + path.string());
  for (int v : labels) out << v << '\n';
  if (!out) fail("write failed for " + path.string());
}

}  // namespace fastmice
