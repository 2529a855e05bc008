#include "homhopf/truncated_uea.hpp"

#include "homhopf/error.hpp"

#include <algorithm>
#include <functional>

namespace homhopf {

namespace {

std::vector<Tree::Label> label_set(int max_weight, int dim) {
  std::vector<Tree::Label> out;
  for (int w = 0; w <= max_weight; ++w)
    for (int d = 0; d < dim; ++d) out.push_back({w, d});
  return out;
}

// Every labelling of every shape with n leaves.
std::vector<Tree> labelled_trees(int n, std::vector<Tree::Label> const& labels) {
  std::vector<Tree> out;
  if (labels.empty()) return out;
  for (auto const& shape : tree_shapes(n)) {
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      std::vector<Tree::Label> ls(n);
      for (int i = 0; i < n; ++i) ls[i] = labels[pick[i]];
      out.push_back(shape.relabel(ls));
      int p = n - 1;
      while (p >= 0 && ++pick[p] == labels.size()) pick[p--] = 0;
      if (p < 0) break;
    }
  }
  return out;
}

// Grafting contexts with m ordinary leaves and one hole.
std::vector<std::vector<int>> contexts(int m, std::vector<Tree::Label> const& labels) {
  std::vector<std::vector<int>> out;
  if (m == 0) return {{kHole}};
  for (auto const& t : labelled_trees(m + 1, labels))
    for (int hole = 0; hole <= m; ++hole) {
      // Only keep labellings whose hole leaf carries the first label, so each
      // context appears once.
      if (!(t.labels()[hole] == labels.front())) continue;
      std::vector<int> code;
      int leaf = 0;
      auto const& c = t.code();
      for (std::size_t i = 0; i < c.size();) {
        if (c[i] == -1) {
          code.push_back(-1);
          ++i;
          continue;
        }
        if (leaf++ == hole) {
          code.push_back(kHole);
        } else {
          code.push_back(c[i]);
          code.push_back(c[i + 1]);
        }
        i += 2;
      }
      out.push_back(std::move(code));
    }
  return out;
}

TreeComb substitute(std::vector<int> const& ctx, TreeComb const& v) {
  TreeComb out;
  for (auto const& [t, c] : v) out.add(substitute(ctx, t), c);
  return out;
}

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TruncatedUEA::TruncatedUEA(HomLie g, int degree_bound, int weight_bound)
    : model_(std::move(g)), n_(degree_bound), w_(weight_bound) {
  if (n_ < 0 || w_ < 0) throw Error(Errc::SchemaError, "degree and weight bounds must be non-negative");
  CheckReport const r = check_hom_lie(lie());
  if (!r.passed()) throw Error(Errc::NotHomLie, "input is not a Hom-Lie algebra: " + r.summary());
  graded_ = true;
  for (auto const& b : lie().bracket)
    if (!b.empty()) graded_ = false;
  build_ideal();
  build_tables();
}

void TruncatedUEA::build_ideal() {
  int const d = lie().dim;
  auto const all = label_set(w_, d);
  auto const lighter = w_ > 0 ? label_set(w_ - 1, d) : std::vector<Tree::Label>{};

  // (x v y) v shift(z) - shift(x) v (y v z)
  for (int nx = 1; nx <= n_; ++nx)
    for (int ny = 1; nx + ny < n_; ++ny)
      for (int nz = 1; nx + ny + nz <= n_; ++nz)
        for (auto const& x : labelled_trees(nx, lighter))
          for (auto const& y : labelled_trees(ny, all))
            for (auto const& z : labelled_trees(nz, lighter)) {
              TreeComb v(Tree::join(Tree::join(x, y), TreeModel::shift(z)));
              v.add(Tree::join(TreeModel::shift(x), Tree::join(y, z)), -1);
              gen_i_.push_back(std::move(v));
            }
  // (s, xi) - (0, phi^s xi)
  if (n_ >= 1)
    for (int s = 1; s <= w_; ++s)
      for (int i = 0; i < d; ++i)
        gen_j_.push_back(TreeComb(Tree::leaf(s, i)) - TreeModel::leaves_of(model_.phi_power(s)(i)));
  // xi v xi' - xi' v xi - [xi, xi']
  if (n_ >= 2)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        TreeComb v(Tree::join(Tree::leaf(0, i), Tree::leaf(0, j)));
        v.add(Tree::join(Tree::leaf(0, j), Tree::leaf(0, i)), -1);
        v -= TreeModel::leaves_of(lie().br(i, j));
        if (!v.empty()) gen_j_.push_back(std::move(v));
      }

  std::vector<std::vector<std::vector<int>>> ctx;
  for (int m = 0; m < n_; ++m) ctx.push_back(contexts(m, all));
  auto degree = [](TreeComb const& v) { return v.terms().rbegin()->first.leaves(); };
  for (auto const& g : gen_i_)
    for (int m = 0; m + degree(g) <= n_; ++m)
      for (auto const& c : ctx[m]) {
        TreeComb const row = substitute(c, g);
        hom_assoc_.insert(row);
        full_.insert(row);
      }
  for (auto const& g : gen_j_)
    for (int m = 0; m + degree(g) <= n_; ++m)
      for (auto const& c : ctx[m]) full_.insert(substitute(c, g));

  // Normal forms: the non-pivot trees, expected to be weight 0.
  basis_.push_back(Tree());
  for (int k = 1; k <= n_; ++k)
    for (auto const& t : labelled_trees(k, label_set(0, d)))
      if (!full_.is_pivot(t)) basis_.push_back(t);
  long long ambient = 1;
  long long per = 1;
  for (int k = 1; k <= n_; ++k) {
    per *= static_cast<long long>(all.size());
    ambient += catalan(k - 1) * per;
  }
  weights_absorbed_ = ambient - static_cast<long long>(full_.rank()) == static_cast<long long>(basis_.size());
  if (!weights_absorbed_) {
    basis_.assign(1, Tree());
    for (int k = 1; k <= n_; ++k)
      for (auto const& t : labelled_trees(k, all))
        if (!full_.is_pivot(t)) basis_.push_back(t);
  }
  std::sort(basis_.begin(), basis_.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
}

std::vector<int> TruncatedUEA::dims() const {
  std::vector<int> out(n_ + 1, 0);
  for (auto const& t : basis_) ++out[t.leaves()];
  return out;
}

int TruncatedUEA::index_of(Tree const& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw Error(Errc::UnknownBasisIndex, "tree " + t.str() + " is not a normal form");
  return it->second;
}

bool TruncatedUEA::in_budget(Tree const& t) const {
  if (t.leaves() > n_) return false;
  for (auto const& l : t.labels())
    if (l.weight > w_ || l.deco >= lie().dim) return false;
  return true;
}

void TruncatedUEA::check_budget(TreeComb const& v) const {
  for (auto const& [t, c] : v)
    if (!in_budget(t)) throw TruncationOverflow("tree " + t.str() + " lies outside the truncation window");
}

TreeComb TruncatedUEA::reduce(TreeComb const& v) const {
  check_budget(v);
  return full_.reduce(v);
}

TreeComb TruncatedUEA::reduce_hom_assoc(TreeComb const& v) const {
  check_budget(v);
  return hom_assoc_.reduce(v);
}

Vec TruncatedUEA::project(TreeComb const& v) const {
  Vec out;
  for (auto const& [t, c] : reduce(v)) out.add(index_of(t), c);
  return out;
}

TreeComb TruncatedUEA::lift(Vec const& v) const {
  TreeComb out;
  for (auto const& [i, c] : v) out.add(basis_.at(i), c);
  return out;
}

void TruncatedUEA::build_tables() {
  int const dim = static_cast<int>(basis_.size());
  HomHopf& h = hopf_;
  h.alg.dim = dim;
  h.alg.table = tabulate(dim, dim, [&](int i, int j) {
    if (basis_[i].leaves() + basis_[j].leaves() > n_) throw TruncationOverflow("product past degree bound");
    return project(model_.graft(basis_[i], basis_[j]));
  });
  h.alg.unit = basis_vec(0);
  std::vector<Vec> tw, tw_inv, s;
  for (auto const& t : basis_) {
    tw.push_back(project(model_.twist(t, 1)));
    tw_inv.push_back(project(model_.twist(t, -1)));
    s.push_back(project(model_.antipode(t)));
  }
  h.alg.alpha = LinearOperator::with_inverse(tw, tw_inv);
  h.alg.multiplicative = true;
  h.coalg.dim = dim;
  for (auto const& t : basis_) {
    // Group by the right leg so each leg is projected once.
    std::map<Tree, TreeComb> by_right;
    for (auto const& [pr, c] : model_.coproduct(t)) by_right[pr.second].add(pr.first, c);
    Tensor d;
    for (auto const& [r, left] : by_right) {
      Vec const pl = project(left);
      Vec const prr = project(TreeComb(r));
      for (auto const& [i, a] : pl)
        for (auto const& [j, b] : prr) d.add(Index{i, j}, a * b);
    }
    h.coalg.comult.push_back(std::move(d));
    h.coalg.counit.push_back(TreeModel::counit(t));
  }
  h.coalg.beta = LinearOperator::identity(dim);
  h.antipode = LinearOperator(s);
  for (auto const& t : basis_) h.grading.degree.push_back(t.leaves());
  h.grading.bound = n_;
}

namespace {

// Reduces both legs of a combination of tree pairs.
bool pair_in_ideal(TreePairComb const& d, std::function<TreeComb(TreeComb const&)> const& red) {
  std::map<Tree, TreeComb> by_right;
  for (auto const& [pr, c] : d) by_right[pr.second].add(pr.first, c);
  std::map<Tree, TreeComb> by_left;
  for (auto const& [r, left] : by_right)
    for (auto const& [l, c] : red(left)) by_left[l].add(r, c);
  for (auto const& [l, right] : by_left)
    if (!red(right).empty()) return false;
  return true;
}

}  // namespace

CheckReport check_ideal_membership(TruncatedUEA const& u, bool strict) {
  CheckReport r;
  TreeModel const& m = u.model();
  auto full = [&](TreeComb const& v) { return u.reduce(v); };
  struct Family {
    char const* name;
    std::vector<TreeComb> const* gens;
  };
  for (auto const& fam : {Family{"hom-assoc-ideal", &u.hom_assoc_generators()},
                          Family{"hopf-ideal", &u.hopf_ideal_generators()}}) {
    std::string const p = fam.name;
    std::vector<Index> f_co, f_eps, f_s, f_tw, f_in;
    for (std::size_t i = 0; i < fam.gens->size(); ++i) {
      TreeComb const& v = (*fam.gens)[i];
      Index const w{static_cast<int>(i)};
      if (!u.in_ideal(v)) f_in.push_back(w);
      if (!pair_in_ideal(m.coproduct(v), full)) f_co.push_back(w);
      if (m.counit(v) != 0) f_eps.push_back(w);
      if (!u.in_ideal(m.antipode(v))) f_s.push_back(w);
      if (!u.in_ideal(m.twist(v, 1)) || !u.in_ideal(m.twist(v, -1))) f_tw.push_back(w);
    }
    std::size_t const n = fam.gens->size();
    r.record(p + "-contains-generators", n, f_in);
    r.record(p + "-coproduct", n, f_co);
    r.record(p + "-counit", n, f_eps);
    r.record(p + "-antipode", n, f_s);
    r.record(p + "-twist", n, f_tw);
  }
  if (strict) {
    std::vector<Index> bad;
    auto only_i = [&](TreeComb const& v) { return u.reduce_hom_assoc(v); };
    auto const& gens = u.hom_assoc_generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!pair_in_ideal(m.coproduct(gens[i]), only_i)) bad.push_back(Index{static_cast<int>(i)});
    r.record("hom-assoc-ideal-coproduct-strict", gens.size(), bad);
  }
  return r;
}

CheckReport check_tree_coassociativity(TreeModel const& m, int degree_bound, int weight_bound) {
  CheckReport r;
  auto const labels = label_set(weight_bound, m.lie().dim);
  std::vector<Index> bad;
  std::size_t n = 0;
  using Triple = LinComb<std::vector<Tree>>;
  for (int k = 0; k <= degree_bound; ++k) {
    std::vector<Tree> trees = k == 0 ? std::vector<Tree>{Tree()} : labelled_trees(k, labels);
    for (auto const& t : trees) {
      Triple lhs, rhs;
      for (auto const& [pr, c] : m.coproduct(t)) {
        for (auto const& [p2, c2] : m.coproduct(pr.first)) lhs.add({p2.first, p2.second, pr.second}, c * c2);
        for (auto const& [p2, c2] : m.coproduct(pr.second)) rhs.add({pr.first, p2.first, p2.second}, c * c2);
      }
      if (!(lhs == rhs)) bad.push_back(Index{k, static_cast<int>(n)});
      ++n;
    }
  }
  r.record("tree-coassociativity", n, bad);
  return r;
}

}  // namespace homhopf
