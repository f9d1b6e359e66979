#include "mhc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mhc/rng.hpp"

namespace mhc {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

Graph gen_random(int n, double eta, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
  if (!(eta > 0.0 && eta < 1.0)) {
    throw std::invalid_argument("gen_random: eta must be in (0,1)");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(eta)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_bounded_valence(int n, int valence, std::uint64_t seed) {
  if (n < 1 || valence < 1) throw std::invalid_argument("bounded valence: bad n/valence");
  if (valence >= n) throw std::invalid_argument("bounded valence: valence must be < n");
  if ((static_cast<long long>(n) * valence) % 2 != 0) {
    throw std::invalid_argument("bounded valence: n*valence must be even");
  }
  if (valence == n - 1) {  // the only simple valence-regular graph is K_n
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
  }

  Rng rng(seed);
  const int restarts = 1000;
  for (int attempt = 0; attempt < restarts; ++attempt) {
    // Pairing model: shuffle stubs, pair consecutively, then repair
    // self-loops/duplicates with random double-edge switches. Switches keep
    // every degree intact, so the result is exactly valence-regular.
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * valence);
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < valence; ++k) stubs.push_back(v);
    }
    rng.shuffle(stubs);
    std::vector<Edge> pairs;
    pairs.reserve(stubs.size() / 2);
    for (size_t i = 0; i < stubs.size(); i += 2) {
      pairs.emplace_back(stubs[i], stubs[i + 1]);
    }

    auto is_bad = [&](const Edge& e, const std::multiset<std::uint64_t>& keys) {
      return e.first == e.second || keys.count(pair_key(e.first, e.second)) > 1;
    };
    std::multiset<std::uint64_t> keys;
    for (const auto& e : pairs) {
      if (e.first != e.second) keys.insert(pair_key(e.first, e.second));
    }

    bool ok = true;
    const long long switch_budget = 200LL * n * valence + 1000;
    long long switches = 0;
    while (true) {
      int bad = -1;
      for (size_t i = 0; i < pairs.size(); ++i) {
        if (is_bad(pairs[i], keys)) {
          bad = static_cast<int>(i);
          break;
        }
      }
      if (bad < 0) break;
      if (switches++ > switch_budget) {
        ok = false;
        break;
      }
      const int other = rng.below_int(static_cast<int>(pairs.size()));
      if (other == bad) continue;
      Edge& e1 = pairs[bad];
      Edge& e2 = pairs[other];
      // swap one endpoint of each pair
      Edge n1{e1.first, e2.second};
      Edge n2{e2.first, e1.second};
      auto erase_one = [&](const Edge& e) {
        if (e.first == e.second) return;
        auto it = keys.find(pair_key(e.first, e.second));
        if (it != keys.end()) keys.erase(it);
      };
      erase_one(e1);
      erase_one(e2);
      if (n1.first != n1.second) keys.insert(pair_key(n1.first, n1.second));
      if (n2.first != n2.second) keys.insert(pair_key(n2.first, n2.second));
      e1 = n1;
      e2 = n2;
    }
    if (!ok) continue;

    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph(n, std::move(edges));
  }
  throw std::runtime_error("bounded valence: exceeded restart budget");
}

Graph gen_irregular_bounded_valence(int n, int valence, double rewire_fraction,
                                    std::uint64_t seed) {
  if (rewire_fraction < 0.0 || rewire_fraction > 1.0) {
    throw std::invalid_argument("irregular bounded valence: rewire fraction in [0,1]");
  }
  Graph base = gen_bounded_valence(n, valence, seed);
  const int rewired = static_cast<int>(rewire_fraction * base.num_edges());
  if (rewired == 0) return base;

  Rng rng(Rng::split(seed, 1));
  std::vector<Edge> edges = base.edges();
  // uniformly chosen distinct edges to delete (partial Fisher-Yates)
  for (int i = 0; i < rewired; ++i) {
    const int j = i + rng.below_int(static_cast<int>(edges.size()) - i);
    std::swap(edges[i], edges[j]);
  }
  std::set<std::uint64_t> original;
  for (const auto& [a, b] : base.edges()) original.insert(pair_key(a, b));
  std::vector<Edge> kept(edges.begin() + rewired, edges.end());
  std::set<std::uint64_t> present;
  for (const auto& [a, b] : kept) present.insert(pair_key(a, b));

  const long long total_pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (total_pairs - static_cast<long long>(original.size()) < rewired) {
    throw std::invalid_argument("irregular bounded valence: not enough non-edges");
  }
  // replacement edges go elsewhere: never on an original slot
  int added = 0;
  while (added < rewired) {
    const int a = rng.below_int(n);
    const int b = rng.below_int(n);
    if (a == b) continue;
    const auto key = pair_key(a, b);
    if (original.count(key) || present.count(key)) continue;
    present.insert(key);
    kept.emplace_back(std::min(a, b), std::max(a, b));
    ++added;
  }
  return Graph(n, std::move(kept));
}

Graph gen_mesh(const std::vector<int>& dims) {
  if (dims.size() < 2 || dims.size() > 4) {
    throw std::invalid_argument("mesh: need 2 to 4 side lengths");
  }
  long long n = 1;
  for (int d : dims) {
    if (d < 2) throw std::invalid_argument("mesh: each side must be >= 2");
    n *= d;
  }
  if (n > 2'000'000) throw std::invalid_argument("mesh: too many vertices");

  std::vector<long long> stride(dims.size());
  stride.back() = 1;
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) {
    stride[i] = stride[i + 1] * dims[i + 1];
  }
  std::vector<Edge> edges;
  std::vector<int> coord(dims.size(), 0);
  for (long long v = 0; v < n; ++v) {
    for (size_t d = 0; d < dims.size(); ++d) {
      if (coord[d] + 1 < dims[d]) {
        edges.emplace_back(static_cast<int>(v), static_cast<int>(v + stride[d]));
      }
    }
    for (int d = static_cast<int>(dims.size()) - 1; d >= 0; --d) {
      if (++coord[d] < dims[d]) break;
      coord[d] = 0;
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph gen_irregular_mesh(const std::vector<int>& dims, double rho, std::uint64_t seed) {
  if (rho < 0.0) throw std::invalid_argument("irregular mesh: rho must be >= 0");
  Graph mesh = gen_mesh(dims);
  const int n = mesh.num_vertices();
  const int extra = static_cast<int>(rho * n);
  if (extra == 0) return mesh;

  const long long total_pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (total_pairs - mesh.num_edges() < extra) {
    throw std::invalid_argument("irregular mesh: not enough non-edges for rho");
  }
  Rng rng(seed);
  std::vector<Edge> edges = mesh.edges();
  std::set<std::uint64_t> present;
  for (const auto& [a, b] : edges) present.insert(pair_key(a, b));
  int added = 0;
  while (added < extra) {
    const int a = rng.below_int(n);
    const int b = rng.below_int(n);
    if (a == b) continue;
    const auto key = pair_key(a, b);
    if (present.count(key)) continue;
    present.insert(key);
    edges.emplace_back(std::min(a, b), std::max(a, b));
    ++added;
  }
  return Graph(n, std::move(edges));
}

Graph gen_scale_free(int n, double alpha, double beta, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("scale free: n must be >= 1");
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument("scale free: alpha and beta must be > 0");
  }
  Rng rng(seed);
  // Power Law Out Degree: vertex v gets floor(beta * x^-alpha) edge credits
  // with x uniform on [1, n]; random pairs with remaining credit become edges.
  std::vector<long long> credit(n);
  for (int v = 0; v < n; ++v) {
    const double x = static_cast<double>(1 + rng.below(static_cast<std::uint64_t>(n)));
    const double c = beta * std::pow(x, -alpha);
    credit[v] = c >= static_cast<double>(n) ? n - 1 : static_cast<long long>(c);
  }

  std::set<std::uint64_t> present;
  std::vector<Edge> edges;
  long long stall = 0;
  const long long stall_cap = 64 + 16LL * n;
  while (true) {
    const int u = rng.below_int(n);
    const int v = rng.below_int(n);
    bool accepted = false;
    if (u != v && credit[u] > 0 && credit[v] > 0) {
      const auto key = pair_key(u, v);
      if (!present.count(key)) {
        present.insert(key);
        edges.emplace_back(std::min(u, v), std::max(u, v));
        --credit[u];
        --credit[v];
        accepted = true;
      }
    }
    if (accepted) {
      stall = 0;
      continue;
    }
    if (++stall < stall_cap) continue;
    // Long stall: check whether any credited non-adjacent pair remains.
    stall = 0;
    std::vector<int> credited;
    for (int w = 0; w < n; ++w) {
      if (credit[w] > 0) credited.push_back(w);
    }
    std::vector<Edge> open;
    for (size_t i = 0; i < credited.size(); ++i) {
      for (size_t j = i + 1; j < credited.size(); ++j) {
        if (!present.count(pair_key(credited[i], credited[j]))) {
          open.emplace_back(credited[i], credited[j]);
        }
      }
    }
    if (open.empty()) break;
    const auto& [a, b] = open[rng.below(open.size())];
    present.insert(pair_key(a, b));
    edges.emplace_back(a, b);
    --credit[a];
    --credit[b];
  }
  return Graph(n, std::move(edges));
}

Graph generate(const GenSpec& spec) {
  spec.validate();
  switch (spec.cls) {
    case GenClass::Random:
      return gen_random(spec.n, spec.eta, spec.seed);
    case GenClass::BoundedValence:
      return gen_bounded_valence(spec.n, spec.valence, spec.seed);
    case GenClass::IrregularBoundedValence:
      return gen_irregular_bounded_valence(spec.n, spec.valence, spec.rewire, spec.seed);
    case GenClass::Mesh2D:
    case GenClass::Mesh3D:
    case GenClass::Mesh4D:
      return gen_mesh(spec.dims);
    case GenClass::IrregularMesh:
      return gen_irregular_mesh(spec.dims, spec.rho, spec.seed);
    case GenClass::ScaleFree:
      return gen_scale_free(spec.n, spec.alpha, spec.beta, spec.seed);
  }
  throw std::logic_error("unreachable");
}

std::string to_string(GenClass c) {
  switch (c) {
    case GenClass::Random: return "random";
    case GenClass::BoundedValence: return "bounded_valence";
    case GenClass::IrregularBoundedValence: return "irregular_bounded_valence";
    case GenClass::Mesh2D: return "mesh2d";
    case GenClass::Mesh3D: return "mesh3d";
    case GenClass::Mesh4D: return "mesh4d";
    case GenClass::IrregularMesh: return "irregular_mesh";
    case GenClass::ScaleFree: return "scale_free";
  }
  return "?";
}

GenClass gen_class_from_string(const std::string& s) {
  static const std::map<std::string, GenClass> table = {
      {"random", GenClass::Random},
      {"bounded_valence", GenClass::BoundedValence},
      {"irregular_bounded_valence", GenClass::IrregularBoundedValence},
      {"mesh2d", GenClass::Mesh2D},
      {"mesh3d", GenClass::Mesh3D},
      {"mesh4d", GenClass::Mesh4D},
      {"irregular_mesh", GenClass::IrregularMesh},
      {"scale_free", GenClass::ScaleFree},
  };
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown generator class: " + s);
  return it->second;
}

void GenSpec::validate() const {
  auto mesh_rank = [&](size_t want) {
    if (dims.size() != want) {
      throw std::invalid_argument(to_string(cls) + ": needs " + std::to_string(want) +
                                  " mesh side lengths");
    }
  };
  switch (cls) {
    case GenClass::Random:
      if (n < 1) throw std::invalid_argument("random: n must be >= 1");
      if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("random: eta in (0,1)");
      break;
    case GenClass::BoundedValence:
    case GenClass::IrregularBoundedValence:
      if (n < 1 || valence < 1 || valence >= n ||
          (static_cast<long long>(n) * valence) % 2 != 0) {
        throw std::invalid_argument("bounded valence: need valence in [1,n) and n*valence even");
      }
      if (cls == GenClass::IrregularBoundedValence && (rewire < 0.0 || rewire > 1.0)) {
        throw std::invalid_argument("irregular bounded valence: rewire in [0,1]");
      }
      break;
    case GenClass::Mesh2D: mesh_rank(2); break;
    case GenClass::Mesh3D: mesh_rank(3); break;
    case GenClass::Mesh4D: mesh_rank(4); break;
    case GenClass::IrregularMesh:
      if (dims.size() < 2 || dims.size() > 4) {
        throw std::invalid_argument("irregular mesh: needs 2 to 4 side lengths");
      }
      if (rho < 0.0) throw std::invalid_argument("irregular mesh: rho >= 0");
      break;
    case GenClass::ScaleFree:
      if (n < 1 || !(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("scale free: need n >= 1, alpha > 0, beta > 0");
      }
      break;
  }
  for (int d : dims) {
    if (d < 2) throw std::invalid_argument("mesh side lengths must be >= 2");
  }
}

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string dims_string(const std::vector<int>& dims) {
  std::string s;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(dims[i]);
  }
  return s;
}

}  // namespace

std::string GenSpec::params_string() const {
  switch (cls) {
    case GenClass::Random: return "eta=" + format_double(eta);
    case GenClass::BoundedValence: return "valence=" + std::to_string(valence);
    case GenClass::IrregularBoundedValence:
      return "valence=" + std::to_string(valence) + ";rewire=" + format_double(rewire);
    case GenClass::Mesh2D:
    case GenClass::Mesh3D:
    case GenClass::Mesh4D: return "dims=" + dims_string(dims);
    case GenClass::IrregularMesh:
      return "dims=" + dims_string(dims) + ";rho=" + format_double(rho);
    case GenClass::ScaleFree:
      return "alpha=" + format_double(alpha) + ";beta=" + format_double(beta);
  }
  return "";
}

std::string GenSpec::instance_id() const {
  if (!id.empty()) return id;
  std::string s = to_string(cls) + "-n" + std::to_string(n);
  std::string params = params_string();
  std::replace(params.begin(), params.end(), ';', '-');
  if (!params.empty()) s += "-" + params;
  s += "-s" + std::to_string(seed);
  return s;
}

GenSpec parse_gen_spec(const std::string& line) {
  GenSpec spec;
  std::istringstream in(line);
  std::string token;
  bool have_class = false, have_n = false;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("manifest: expected key=value, got '" + token + "'");
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "class") {
        spec.cls = gen_class_from_string(value);
        have_class = true;
      } else if (key == "n") {
        spec.n = std::stoi(value);
        have_n = true;
      } else if (key == "eta") {
        spec.eta = std::stod(value);
      } else if (key == "valence") {
        spec.valence = std::stoi(value);
      } else if (key == "rewire") {
        spec.rewire = std::stod(value);
      } else if (key == "dims") {
        spec.dims.clear();
        std::istringstream ds(value);
        std::string part;
        while (std::getline(ds, part, 'x')) spec.dims.push_back(std::stoi(part));
      } else if (key == "rho") {
        spec.rho = std::stod(value);
      } else if (key == "alpha") {
        spec.alpha = std::stod(value);
      } else if (key == "beta") {
        spec.beta = std::stod(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "id") {
        spec.id = value;
      } else {
        throw std::invalid_argument("manifest: unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("manifest: bad value for '" + key + "'");
    }
  }
  if (!have_class) throw std::invalid_argument("manifest: missing class=");
  if (!spec.dims.empty()) {
    long long n = 1;
    for (int d : spec.dims) n *= d;
    spec.n = static_cast<int>(n);
  } else if (!have_n) {
    throw std::invalid_argument("manifest: missing n=");
  }
  spec.validate();
  return spec;
}

std::vector<GenSpec> parse_manifest(std::istream& in) {
  std::vector<GenSpec> specs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      specs.push_back(parse_gen_spec(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return specs;
}

}  // namespace mhc
