#include "homhopf/cli.hpp"

#include <fstream>

namespace homhopf::cli {

namespace {

using nlohmann::json;

std::string at(std::string const& ptr, std::string const& key) {
  std::string k;
  for (char c : key) {
    if (c == '~') k += "~0";
    else if (c == '/') k += "~1";
    else k += c;
  }
  return ptr + "/" + k;
}

std::string at(std::string const& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

json const& field(json const& j, std::string const& ptr, std::string const& key) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(ptr, key), "missing field");
  return *it;
}

json const& array(json const& j, std::string const& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  return j;
}

int integer(json const& j, std::string const& ptr) {
  if (!j.is_number_integer()) throw SchemaError(ptr, "expected an integer");
  return j.get<int>();
}

int index(json const& j, std::string const& ptr, int dim) {
  int const i = integer(j, ptr);
  if (i < 0 || i >= dim) throw SchemaError(ptr, "basis index outside dimension " + std::to_string(dim));
  return i;
}

Rational coeff(json const& j, std::string const& ptr) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(ptr, "expected a rational \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (std::invalid_argument const& e) {
    throw SchemaError(ptr, e.what());
  }
}

std::string name(json const& j, std::string const& ptr) {
  if (!j.is_string()) throw SchemaError(ptr, "expected a name");
  return j.get<std::string>();
}

// [[index, coefficient], ...]
Vec vec(json const& j, std::string const& ptr, int dim) {
  Vec v;
  for (std::size_t i = 0; i < array(j, ptr).size(); ++i) {
    std::string const p = at(ptr, i);
    json const& term = array(j[i], p);
    if (term.size() != 2) throw SchemaError(p, "expected [index, coefficient]");
    v.add(index(term[0], at(p, 0), dim), coeff(term[1], at(p, 1)));
  }
  return v;
}

std::vector<Vec> columns(json const& j, std::string const& ptr, int dim) {
  if (array(j, ptr).size() != static_cast<std::size_t>(dim))
    throw SchemaError(ptr, "expected " + std::to_string(dim) + " columns");
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < j.size(); ++i) cols.push_back(vec(j[i], at(ptr, i), dim));
  return cols;
}

// "id", {"scalar": c}, {"diagonal": [c, ...]} or {"columns": [...], "inverse": [...]}.
LinearOperator op(json const& j, std::string const& ptr, int dim, bool invertible) {
  LinearOperator a;
  if (j.is_string() && j.get<std::string>() == "id") return LinearOperator::identity(dim);
  if (!j.is_object()) throw SchemaError(ptr, "expected \"id\" or an operator object");
  if (j.contains("scalar")) {
    a = LinearOperator::scalar(dim, coeff(j["scalar"], at(ptr, "scalar")));
  } else if (j.contains("diagonal")) {
    std::string const p = at(ptr, "diagonal");
    if (array(j["diagonal"], p).size() != static_cast<std::size_t>(dim)) throw SchemaError(p, "wrong length");
    std::vector<Vec> cols(dim);
    for (int i = 0; i < dim; ++i) cols[i].add(i, coeff(j["diagonal"][i], at(p, i)));
    a = LinearOperator(std::move(cols));
  } else {
    auto cols = columns(field(j, ptr, "columns"), at(ptr, "columns"), dim);
    if (j.contains("inverse")) {
      try {
        return LinearOperator::with_inverse(std::move(cols), columns(j["inverse"], at(ptr, "inverse"), dim));
      } catch (Error const& e) {
        if (e.code() == Errc::InverseMismatch) throw Error(Errc::InverseMismatch, at(ptr, "inverse") + ": " + e.what());
        throw;
      }
    }
    a = LinearOperator(std::move(cols));
  }
  if (invertible && !a.is_invertible())
    throw Error(Errc::InverseMismatch, ptr + ": operator is singular and no inverse was declared");
  return a;
}

std::optional<Vec>& cell(std::vector<std::optional<Vec>>& t, int row, int cols, int col) {
  return t[static_cast<std::size_t>(row) * cols + col];
}

// [[row, col, vec], ...] into a dense table of zero vectors.
void sparse_table(json const& j, std::string const& ptr, int rows, int cols, int out_dim,
                  std::vector<std::optional<Vec>>& t) {
  t.assign(static_cast<std::size_t>(rows) * cols, Vec{});
  for (std::size_t i = 0; i < array(j, ptr).size(); ++i) {
    std::string const p = at(ptr, i);
    json const& e = array(j[i], p);
    if (e.size() != 3) throw SchemaError(p, "expected [row, column, vector]");
    int const r = index(e[0], at(p, 0), rows);
    int const c = index(e[1], at(p, 1), cols);
    cell(t, r, cols, c)->add_scaled(vec(e[2], at(p, 2), out_dim), 1);
  }
}

void overflow_cells(json const& j, std::string const& ptr, int rows, int cols, std::vector<std::optional<Vec>>& t) {
  for (std::size_t i = 0; i < array(j, ptr).size(); ++i) {
    std::string const p = at(ptr, i);
    json const& e = array(j[i], p);
    if (e.size() != 2) throw SchemaError(p, "expected [row, column]");
    cell(t, index(e[0], at(p, 0), rows), cols, index(e[1], at(p, 1), cols)).reset();
  }
}

std::vector<int> int_list(json const& j, std::string const& ptr, std::size_t n) {
  if (array(j, ptr).size() != n) throw SchemaError(ptr, "expected " + std::to_string(n) + " entries");
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(integer(j[i], at(ptr, i)));
  return out;
}

// [[a, b, c], ...] as an arity-2 tensor.
Tensor pair_tensor(json const& j, std::string const& ptr, int d0, int d1) {
  Tensor t;
  for (std::size_t i = 0; i < array(j, ptr).size(); ++i) {
    std::string const p = at(ptr, i);
    json const& e = array(j[i], p);
    if (e.size() != 3) throw SchemaError(p, "expected [index, index, coefficient]");
    t.add(Index{index(e[0], at(p, 0), d0), index(e[1], at(p, 1), d1)}, coeff(e[2], at(p, 2)));
  }
  return t;
}

template <class F>
void validated(std::string const& ptr, F&& f) {
  try {
    f();
  } catch (Error const& e) {
    if (e.code() == Errc::SchemaError || e.code() == Errc::UnknownBasisIndex) throw SchemaError(ptr, e.what());
    throw;
  }
}

HomHopf parse_hopf(json const& j, std::string const& ptr) {
  int const n = integer(field(j, ptr, "dim"), at(ptr, "dim"));
  if (n < 1) throw SchemaError(at(ptr, "dim"), "dimension must be positive");
  HomHopf h;
  h.alg.dim = n;
  h.coalg.dim = n;
  sparse_table(field(j, ptr, "mul"), at(ptr, "mul"), n, n, n, h.alg.table);
  if (j.contains("overflow")) overflow_cells(j["overflow"], at(ptr, "overflow"), n, n, h.alg.table);
  h.alg.unit = vec(field(j, ptr, "unit"), at(ptr, "unit"), n);
  h.alg.alpha = j.contains("alpha") ? op(j["alpha"], at(ptr, "alpha"), n, true) : LinearOperator::identity(n);
  if (j.contains("multiplicative")) {
    if (!j["multiplicative"].is_boolean()) throw SchemaError(at(ptr, "multiplicative"), "expected a boolean");
    h.alg.multiplicative = j["multiplicative"].get<bool>();
  }
  json const& cm = array(field(j, ptr, "comul"), at(ptr, "comul"));
  if (cm.size() != static_cast<std::size_t>(n)) throw SchemaError(at(ptr, "comul"), "expected one entry per basis vector");
  for (std::size_t i = 0; i < cm.size(); ++i) h.coalg.comult.push_back(pair_tensor(cm[i], at(at(ptr, "comul"), i), n, n));
  json const& cu = array(field(j, ptr, "counit"), at(ptr, "counit"));
  if (cu.size() != static_cast<std::size_t>(n)) throw SchemaError(at(ptr, "counit"), "expected one entry per basis vector");
  for (std::size_t i = 0; i < cu.size(); ++i) h.coalg.counit.push_back(coeff(cu[i], at(at(ptr, "counit"), i)));
  h.coalg.beta = j.contains("beta") ? op(j["beta"], at(ptr, "beta"), n, true) : LinearOperator::identity(n);
  h.antipode = op(field(j, ptr, "antipode"), at(ptr, "antipode"), n, false);
  if (j.contains("degree")) h.grading.degree = int_list(j["degree"], at(ptr, "degree"), n);
  if (j.contains("dual_degree")) h.grading.dual_degree = int_list(j["dual_degree"], at(ptr, "dual_degree"), n);
  if (j.contains("bound")) h.grading.bound = integer(j["bound"], at(ptr, "bound"));
  validated(ptr, [&] { validate(h); });
  if (j.contains("twist")) {
    std::string const p = at(ptr, "twist");
    json const& t = j["twist"];
    LinearOperator const a = op(field(t, p, "a"), at(p, "a"), n, true);
    LinearOperator const b = op(field(t, p, "b"), at(p, "b"), n, true);
    h = hopf_twist(h, a, b);
  }
  return h;
}

HomLie parse_lie(json const& j, std::string const& ptr) {
  int const n = integer(field(j, ptr, "dim"), at(ptr, "dim"));
  if (n < 1) throw SchemaError(at(ptr, "dim"), "dimension must be positive");
  HomLie g;
  g.dim = n;
  std::vector<std::optional<Vec>> t;
  sparse_table(j.contains("bracket") ? j["bracket"] : json::array(), at(ptr, "bracket"), n, n, n, t);
  for (auto& e : t) g.bracket.push_back(std::move(*e));
  g.phi = j.contains("phi") ? op(j["phi"], at(ptr, "phi"), n, true) : LinearOperator::identity(n);
  validated(ptr, [&] { validate(g); });
  return g;
}

Side side(json const& j, std::string const& ptr) {
  std::string const s = name(j, ptr);
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw SchemaError(ptr, "side must be \"left\" or \"right\"");
}

// "trivial": true replaces the table by h ▷ x = epsilon(h) gamma(x), or x ↦ theta(x) ⊗ 1.
bool trivial(json const& j, std::string const& ptr) {
  if (!j.contains("trivial")) return false;
  if (!j["trivial"].is_boolean()) throw SchemaError(at(ptr, "trivial"), "expected a boolean");
  return j["trivial"].get<bool>();
}

void parse_action(InputDocument& d, std::string const& key, json const& j, std::string const& ptr) {
  std::string const acting = name(field(j, ptr, "acting"), at(ptr, "acting"));
  std::string const carrier = name(field(j, ptr, "carrier"), at(ptr, "carrier"));
  Side const sd = side(field(j, ptr, "side"), at(ptr, "side"));
  d.links[key] = {acting, carrier};
  if (d.hom_lie.count(acting)) {
    if (!d.hom_lie.count(carrier)) throw SchemaError(at(ptr, "carrier"), "unknown Hom-Lie algebra \"" + carrier + "\"");
    LieAction a;
    a.side = sd;
    a.acting_dim = d.hom_lie.at(acting).dim;
    a.carrier_dim = d.hom_lie.at(carrier).dim;
    a.gamma = op(field(j, ptr, "gamma"), at(ptr, "gamma"), a.carrier_dim, true);
    if (trivial(j, ptr)) {
      d.lie_actions[key] = trivial_lie_action(sd, a.acting_dim, a.gamma);
      return;
    }
    std::vector<std::optional<Vec>> t;
    sparse_table(field(j, ptr, "table"), at(ptr, "table"), a.acting_dim, a.carrier_dim, a.carrier_dim, t);
    for (auto& e : t) a.table.push_back(std::move(*e));
    d.lie_actions[key] = std::move(a);
    return;
  }
  if (!d.hopf.count(acting)) throw SchemaError(at(ptr, "acting"), "unknown algebra \"" + acting + "\"");
  if (!d.hopf.count(carrier)) throw SchemaError(at(ptr, "carrier"), "unknown algebra \"" + carrier + "\"");
  ActionData a;
  a.side = sd;
  a.acting_dim = d.hopf.at(acting).dim();
  a.carrier_dim = d.hopf.at(carrier).dim();
  a.gamma = op(field(j, ptr, "gamma"), at(ptr, "gamma"), a.carrier_dim, true);
  if (trivial(j, ptr)) {
    d.actions[key] = trivial_action(sd, d.hopf.at(acting), a.gamma);
    return;
  }
  sparse_table(field(j, ptr, "table"), at(ptr, "table"), a.acting_dim, a.carrier_dim, a.carrier_dim, a.table);
  if (j.contains("overflow")) overflow_cells(j["overflow"], at(ptr, "overflow"), a.acting_dim, a.carrier_dim, a.table);
  d.actions[key] = std::move(a);
}

void parse_coaction(InputDocument& d, std::string const& key, json const& j, std::string const& ptr) {
  std::string const coalg = name(field(j, ptr, "coalgebra"), at(ptr, "coalgebra"));
  std::string const carrier = name(field(j, ptr, "carrier"), at(ptr, "carrier"));
  if (!d.hopf.count(coalg)) throw SchemaError(at(ptr, "coalgebra"), "unknown algebra \"" + coalg + "\"");
  if (!d.hopf.count(carrier)) throw SchemaError(at(ptr, "carrier"), "unknown algebra \"" + carrier + "\"");
  d.links[key] = {coalg, carrier};
  int const n = d.hopf.at(carrier).dim();
  if (trivial(j, ptr)) {
    d.coactions[key] = trivial_coaction(d.hopf.at(coalg), op(field(j, ptr, "theta"), at(ptr, "theta"), n, true));
    return;
  }
  CoactionData c;
  c.carrier_dim = n;
  c.coalgebra_dim = d.hopf.at(coalg).dim();
  c.table.resize(c.carrier_dim);
  std::string const tp = at(ptr, "table");
  json const& t = array(field(j, ptr, "table"), tp);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string const p = at(tp, i);
    json const& e = array(t[i], p);
    if (e.size() != 2) throw SchemaError(p, "expected [carrier index, terms]");
    c.table[index(e[0], at(p, 0), c.carrier_dim)] += pair_tensor(e[1], at(p, 1), c.carrier_dim, c.coalgebra_dim);
  }
  c.theta = op(field(j, ptr, "theta"), at(ptr, "theta"), c.carrier_dim, true);
  d.coactions[key] = std::move(c);
}

template <class F>
void each(json const& doc, std::string const& key, F&& f) {
  if (!doc.contains(key)) return;
  std::string const ptr = "/" + key;
  if (!doc[key].is_object()) throw SchemaError(ptr, "expected an object of named entries");
  for (auto const& [k, v] : doc[key].items()) f(k, v, at(ptr, k));
}

}  // namespace

InputDocument parse_input(json const& doc) {
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object");
  if (name(field(doc, "", "field"), "/field") != "Q") throw SchemaError("/field", "only the field \"Q\" is supported");
  InputDocument d;
  each(doc, "hopf", [&](std::string const& k, json const& v, std::string const& p) { d.hopf[k] = parse_hopf(v, p); });
  each(doc, "hom_lie", [&](std::string const& k, json const& v, std::string const& p) { d.hom_lie[k] = parse_lie(v, p); });
  each(doc, "actions", [&](std::string const& k, json const& v, std::string const& p) { parse_action(d, k, v, p); });
  each(doc, "coactions", [&](std::string const& k, json const& v, std::string const& p) { parse_coaction(d, k, v, p); });
  if (doc.contains("pipeline")) {
    json const& p = doc["pipeline"];
    if (!p.is_object()) throw SchemaError("/pipeline", "expected an object");
    for (auto const& [k, v] : p.items()) {
      std::string const ptr = at("/pipeline", k);
      if (k == "command") d.pipeline.command = name(v, ptr);
      else if (k == "degree") d.pipeline.degree = integer(v, ptr);
      else if (k == "weight_bound") d.pipeline.weight_bound = integer(v, ptr);
      else if (k == "order_constraint") {
        if (!v.is_boolean()) throw SchemaError(ptr, "expected a boolean");
        d.pipeline.order_constraint = v.get<bool>();
      } else {
        std::string const ref = name(v, ptr);
        if (!d.hopf.count(ref) && !d.hom_lie.count(ref) && !d.links.count(ref))
          throw SchemaError(ptr, "unknown entry \"" + ref + "\"");
        d.pipeline.refs[k] = ref;
      }
    }
  }
  return d;
}

InputDocument parse_input_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (json::parse_error const& e) {
    throw SchemaError("", e.what());
  }
  return parse_input(doc);
}

}  // namespace homhopf::cli
