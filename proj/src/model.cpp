#include "sasver/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace sasver {

namespace {

struct RawEntry {
  std::string text;
  int line = 0;
};

struct RawModel {
  std::optional<RawEntry> src_vars, tgt_vars;
  std::map<std::pair<int, int>, RawEntry> src_g, tgt_g, phi;
  std::map<int, RawEntry> xi, eta, fmap;
  std::vector<RawEntry> guards;
  std::optional<RawEntry> box, points, seed;
  bool has_source = false, has_structure = false, has_target = false,
       has_map = false;
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << line << ": " << msg;
  throw ModelError(os.str());
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Splits "g[1][2]" into base name and 1-based indices; returns index count.
int split_indices(const std::string& key, std::string& base, int& i, int& j) {
  size_t br = key.find('[');
  base = br == std::string::npos ? key : key.substr(0, br);
  int count = 0;
  size_t pos = br;
  int out[2] = {0, 0};
  while (pos != std::string::npos && count < 2) {
    size_t close = key.find(']', pos);
    if (close == std::string::npos) return -1;
    const char* b = key.data() + pos + 1;
    const char* e = key.data() + close;
    auto res = std::from_chars(b, e, out[count]);
    if (res.ec != std::errc() || res.ptr != e) return -1;
    ++count;
    pos = key.find('[', close);
    if (pos != std::string::npos && pos != close + 1) return -1;
  }
  if (pos != std::string::npos) return -1;  // more than two index groups
  i = out[0];
  j = out[1];
  return count;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

void store_matrix_entry(const std::string& origin, std::map<std::pair<int, int>, RawEntry>& m,
                        const char* what, bool mirror, int i, int j,
                        const RawEntry& e) {
  std::pair<int, int> key{i, j};
  if (mirror && j < i) key = {j, i};
  auto it = m.find(key);
  if (it != m.end() && it->second.text != e.text) {
    std::ostringstream os;
    os << what << "[" << i << "][" << j << "] conflicts with the entry on line "
       << it->second.line;
    fail(origin, e.line, os.str());
  }
  if (it == m.end()) m.emplace(key, e);
}

Expr parse_entry(const std::string& origin, const RawEntry& e, const Chart& chart) {
  try {
    return parse_expression(e.text, chart);
  } catch (const ParseError& pe) {
    fail(origin, e.line, std::string("in '") + e.text + "': " + pe.what());
  }
}

Chart chart_from(const std::string& origin, const RawEntry& vars, const char* section) {
  std::vector<std::string> names = split_words(vars.text);
  if (names.empty()) fail(origin, vars.line, std::string(section) + " vars is empty");
  for (const auto& n : names) {
    if (!valid_identifier(n))
      fail(origin, vars.line, "invalid variable name '" + n + "'");
    if (std::count(names.begin(), names.end(), n) > 1)
      fail(origin, vars.line, "duplicate variable name '" + n + "'");
  }
  return Chart{names};
}

MatrixFieldExpr matrix_from(const std::string& origin,
                            const std::map<std::pair<int, int>, RawEntry>& entries,
                            const Chart& chart, const char* what, bool mirror) {
  const int n = chart.dim();
  for (const auto& [key, e] : entries)
    if (key.first < 1 || key.first > n || key.second < 1 || key.second > n) {
      std::ostringstream os;
      os << what << "[" << key.first << "][" << key.second
         << "] is out of range for dimension " << n;
      fail(origin, e.line, os.str());
    }
  RawEntry zero{"0", 0};
  MatrixFieldExpr f;
  f.entry.assign(n, std::vector<Expr>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto it = entries.find({i, j});
      if (it == entries.end() && mirror) it = entries.find({j, i});
      const RawEntry& e = it == entries.end() ? zero : it->second;
      f.entry[i - 1][j - 1] = parse_entry(origin, e, chart);
    }
  return f;
}

std::vector<Expr> vector_from(const std::string& origin,
                              const std::map<int, RawEntry>& entries, const Chart& chart,
                              const char* what, int n) {
  for (const auto& [idx, e] : entries)
    if (idx < 1 || idx > n) {
      std::ostringstream os;
      os << what << "[" << idx << "] is out of range for dimension " << n;
      fail(origin, e.line, os.str());
    }
  RawEntry zero{"0", 0};
  std::vector<Expr> out(n);
  for (int i = 1; i <= n; ++i) {
    auto it = entries.find(i);
    out[i - 1] = parse_entry(origin, it == entries.end() ? zero : it->second, chart);
  }
  return out;
}

}  // namespace

SubmersionSpec load_model(const std::string& text, const std::string& origin) {
  RawModel raw;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(origin, lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section == "source")
        raw.has_source = true;
      else if (section == "structure")
        raw.has_structure = true;
      else if (section == "target")
        raw.has_target = true;
      else if (section == "map")
        raw.has_map = true;
      else if (section != "domain" && section != "sample")
        fail(origin, lineno, "unknown section [" + section + "]");
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(origin, lineno, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    RawEntry entry{trim(line.substr(eq + 1)), lineno};
    if (entry.text.empty()) fail(origin, lineno, "empty value for '" + key + "'");
    if (section.empty()) fail(origin, lineno, "'" + key + "' appears before any section");

    std::string base;
    int i = 0, j = 0;
    int nidx = split_indices(key, base, i, j);
    if (nidx < 0) fail(origin, lineno, "malformed indices in '" + key + "'");

    auto expect = [&](int want) {
      if (nidx != want) {
        std::ostringstream os;
        os << "'" << base << "' takes " << want << (want == 1 ? " index" : " indices");
        fail(origin, lineno, os.str());
      }
    };

    if (section == "source" || section == "target") {
      bool src = section == "source";
      if (base == "vars") {
        expect(0);
        auto& slot = src ? raw.src_vars : raw.tgt_vars;
        if (slot) fail(origin, lineno, "duplicate vars in [" + section + "]");
        slot = entry;
      } else if (base == "g") {
        expect(2);
        store_matrix_entry(origin, src ? raw.src_g : raw.tgt_g, "g", true, i, j, entry);
      } else {
        fail(origin, lineno, "unknown key '" + key + "' in [" + section + "]");
      }
    } else if (section == "structure") {
      if (base == "phi") {
        expect(2);
        store_matrix_entry(origin, raw.phi, "phi", false, i, j, entry);
      } else if (base == "xi" || base == "eta") {
        expect(1);
        auto& m = base == "xi" ? raw.xi : raw.eta;
        auto it = m.find(i);
        if (it != m.end() && it->second.text != entry.text)
          fail(origin, lineno, "duplicate entry " + key);
        m.emplace(i, entry);
      } else {
        fail(origin, lineno, "unknown key '" + key + "' in [structure]");
      }
    } else if (section == "map") {
      if (base == "F") {
        expect(1);
        auto it = raw.fmap.find(i);
        if (it != raw.fmap.end())
          fail(origin, lineno, "duplicate component " + key);
        raw.fmap.emplace(i, entry);
      } else if (base == "guard") {
        expect(0);
        raw.guards.push_back(entry);
      } else {
        fail(origin, lineno, "unknown key '" + key + "' in [map]");
      }
    } else if (section == "domain") {
      if (base == "box") {
        expect(0);
        raw.box = entry;
      } else {
        fail(origin, lineno, "unknown key '" + key + "' in [domain]");
      }
    } else {  // sample
      if (base == "points") {
        expect(0);
        raw.points = entry;
      } else if (base == "seed") {
        expect(0);
        raw.seed = entry;
      } else {
        fail(origin, lineno, "unknown key '" + key + "' in [sample]");
      }
    }
  }

  if (!raw.has_source) fail(origin, lineno, "missing [source] section");
  if (!raw.src_vars) fail(origin, lineno, "missing vars in [source]");
  if (raw.has_target != raw.has_map)
    fail(origin, lineno, "[target] and [map] must be given together");

  SubmersionSpec spec;
  spec.name = origin;
  spec.source.name = origin + ":source";
  spec.source.chart = chart_from(origin, *raw.src_vars, "source");
  spec.source.metric.chart = spec.source.chart;
  spec.source.metric.g =
      matrix_from(origin, raw.src_g, spec.source.chart, "g", true);

  if (raw.has_structure) {
    AlmostContactStructure st;
    st.phi.entry = matrix_from(origin, raw.phi, spec.source.chart, "phi", false).entry;
    st.xi.comp = vector_from(origin, raw.xi, spec.source.chart, "xi",
                             spec.source.chart.dim());
    st.eta.comp = vector_from(origin, raw.eta, spec.source.chart, "eta",
                              spec.source.chart.dim());
    spec.source.structure = std::move(st);
  }

  if (raw.has_target) {
    if (!raw.tgt_vars) fail(origin, lineno, "missing vars in [target]");
    spec.target.name = origin + ":target";
    spec.target.chart = chart_from(origin, *raw.tgt_vars, "target");
    spec.target.metric.chart = spec.target.chart;
    spec.target.metric.g =
        matrix_from(origin, raw.tgt_g, spec.target.chart, "g", true);

    const int k = spec.target.chart.dim();
    for (int c = 1; c <= k; ++c)
      if (!raw.fmap.count(c)) {
        std::ostringstream os;
        os << "missing map component F[" << c << "]";
        fail(origin, lineno, os.str());
      }
    for (const auto& [idx, e] : raw.fmap)
      if (idx < 1 || idx > k) {
        std::ostringstream os;
        os << "F[" << idx << "] is out of range for target dimension " << k;
        fail(origin, e.line, os.str());
      }
    for (int c = 1; c <= k; ++c)
      spec.map.push_back(parse_entry(origin, raw.fmap.at(c), spec.source.chart));
    for (const auto& ge : raw.guards)
      spec.guards.push_back(parse_entry(origin, ge, spec.source.chart));
  } else if (!raw.guards.empty()) {
    fail(origin, raw.guards.front().line, "guard given without a [map] section");
  }

  if (raw.box) {
    auto words = split_words(raw.box->text);
    double lo = 0, hi = 0;
    try {
      if (words.size() != 2) throw std::invalid_argument("count");
      lo = std::stod(words[0]);
      hi = std::stod(words[1]);
    } catch (const std::exception&) {
      fail(origin, raw.box->line, "box wants two numbers: lo hi");
    }
    if (!(lo < hi)) fail(origin, raw.box->line, "box lower bound must be below upper");
    spec.box_lo = lo;
    spec.box_hi = hi;
  }
  if (raw.points) {
    try {
      spec.default_points = std::stoi(raw.points->text);
    } catch (const std::exception&) {
      spec.default_points = 0;
    }
    if (spec.default_points <= 0)
      fail(origin, raw.points->line, "points wants a positive integer");
  }
  if (raw.seed) {
    try {
      spec.default_seed = std::stoull(raw.seed->text);
    } catch (const std::exception&) {
      fail(origin, raw.seed->line, "seed wants a nonnegative integer");
    }
  }
  return spec;
}

SubmersionSpec load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str(), path);
}

}  // namespace sasver
