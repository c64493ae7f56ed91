#include "gtfa/group.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gtfa/errors.hpp"

namespace gtfa {

namespace {

std::string join_lines(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

std::optional<int> detect_cyclic(const FiniteGroup& t, const UnitaryDual& dual) {
  const int n = t.order;
  if (t.identity != 0 || static_cast<int>(dual.irreps.size()) != n) return std::nullopt;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t.mul(x, y) != (x + y) % n) return std::nullopt;
  for (int k = 0; k < n; ++k) {
    const Irrep& eta = dual.irreps[k];
    if (eta.dim != 1) return std::nullopt;
    for (int x = 0; x < n; ++x)
      if (std::abs(eta.matrices[x](0, 0) - unit_root(static_cast<long long>(k) * x, n)) > 1e-10)
        return std::nullopt;
  }
  return n;
}

}  // namespace

InvariantError::InvariantError(std::vector<std::string> violations)
    : Error("group invariants violated: " + join_lines(violations)),
      violations_(std::move(violations)) {}

Group::Group(FiniteGroup table, UnitaryDual dual, std::string name)
    : table_(std::move(table)), dual_(std::move(dual)), name_(std::move(name)) {
  const int n = table_.order;
  int total = 0;
  for (const auto& eta : dual_.irreps) {
    offsets_.push_back(total);
    total += eta.dim * eta.dim;
  }
  if (total != n)
    throw InvariantError({"completeness: sum of squared irrep dimensions " + std::to_string(total) +
                          " differs from group order " + std::to_string(n)});

  synthesis_.resize(n, n);
  analysis_.resize(n, n);
  row_weights_.resize(n);
  row_irrep_.resize(n);
  for (int e = 0; e < irrep_count(); ++e) {
    const int d = dual_.irreps[e].dim;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const int r = offsets_[e] + k + j * d;
        row_weights_[r] = d;
        row_irrep_[r] = e;
        for (int x = 0; x < n; ++x) {
          const Complex v = dual_.irreps[e].matrices[x](j, k);
          synthesis_(x, r) = static_cast<double>(d) * v;
          analysis_(r, x) = std::conj(v) / static_cast<double>(n);
        }
      }
  }
  cyclic_order_ = detect_cyclic(table_, dual_);
}

GroupPtr build_cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be at least 1, got " + std::to_string(n));
  FiniteGroup t;
  t.order = n;
  t.identity = 0;
  t.cayley.resize(static_cast<std::size_t>(n) * n);
  t.inverse.resize(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t.cayley[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
    t.inverse[x] = (n - x) % n;
  }
  UnitaryDual dual;
  dual.trivial_index = 0;
  for (int k = 0; k < n; ++k) {
    Irrep eta;
    eta.dim = 1;
    for (int x = 0; x < n; ++x) {
      Matrix m(1, 1);
      m(0, 0) = unit_root(static_cast<long long>(k) * x, n);
      eta.matrices.push_back(std::move(m));
    }
    dual.irreps.push_back(std::move(eta));
  }
  return std::make_shared<const Group>(std::move(t), std::move(dual), "cyclic:" + std::to_string(n));
}

GroupPtr build_dihedral(int n) {
  if (n < 3) throw Error("dihedral parameter must be at least 3, got " + std::to_string(n));
  const int order = 2 * n;
  // element s^f r^k has index f * n + k
  auto index = [n](int f, int k) { return f * n + ((k % n) + n) % n; };
  FiniteGroup t;
  t.order = order;
  t.identity = 0;
  t.cayley.resize(static_cast<std::size_t>(order) * order);
  t.inverse.resize(order);
  for (int a = 0; a < order; ++a) {
    const int f1 = a / n, k1 = a % n;
    for (int b = 0; b < order; ++b) {
      const int f2 = b / n, k2 = b % n;
      // r^k s = s r^{-k}
      const int k = (f2 == 0 ? k1 : -k1) + k2;
      t.cayley[static_cast<std::size_t>(a) * order + b] = index((f1 + f2) % 2, k);
    }
    t.inverse[a] = f1 == 0 ? index(0, -k1) : a;
  }

  UnitaryDual dual;
  dual.trivial_index = 0;
  auto one_dim = [&](double rot, double refl) {
    Irrep eta;
    eta.dim = 1;
    for (int a = 0; a < order; ++a) {
      const int f = a / n, k = a % n;
      double v = (k % 2 == 1) ? rot : 1.0;
      if (f == 1) v *= refl;
      Matrix m(1, 1);
      m(0, 0) = v;
      eta.matrices.push_back(std::move(m));
    }
    dual.irreps.push_back(std::move(eta));
  };
  one_dim(1.0, 1.0);
  one_dim(1.0, -1.0);
  if (n % 2 == 0) {
    one_dim(-1.0, 1.0);
    one_dim(-1.0, -1.0);
  }
  const int two_dim_count = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
  for (int j = 1; j <= two_dim_count; ++j) {
    Irrep eta;
    eta.dim = 2;
    for (int a = 0; a < order; ++a) {
      const int f = a / n, k = a % n;
      Matrix rot = Matrix::Zero(2, 2);
      rot(0, 0) = unit_root(static_cast<long long>(j) * k, n);
      rot(1, 1) = unit_root(-static_cast<long long>(j) * k, n);
      if (f == 1) {
        Matrix swap = Matrix::Zero(2, 2);
        swap(0, 1) = 1.0;
        swap(1, 0) = 1.0;
        rot = swap * rot;
      }
      eta.matrices.push_back(std::move(rot));
    }
    dual.irreps.push_back(std::move(eta));
  }
  return std::make_shared<const Group>(std::move(t), std::move(dual), "dihedral:" + std::to_string(n));
}

GroupPtr build_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order();
  const int order = na * nb;
  FiniteGroup t;
  t.order = order;
  t.identity = a->identity() * nb + b->identity();
  t.cayley.resize(static_cast<std::size_t>(order) * order);
  t.inverse.resize(order);
  for (int x = 0; x < order; ++x) {
    const int xa = x / nb, xb = x % nb;
    for (int y = 0; y < order; ++y) {
      const int ya = y / nb, yb = y % nb;
      t.cayley[static_cast<std::size_t>(x) * order + y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
    }
    t.inverse[x] = a->inv(xa) * nb + b->inv(xb);
  }
  UnitaryDual dual;
  dual.trivial_index = a->trivial() * b->irrep_count() + b->trivial();
  for (int ea = 0; ea < a->irrep_count(); ++ea)
    for (int eb = 0; eb < b->irrep_count(); ++eb) {
      const Irrep& ra = a->irrep(ea);
      const Irrep& rb = b->irrep(eb);
      Irrep eta;
      eta.dim = ra.dim * rb.dim;
      for (int x = 0; x < order; ++x) {
        const Matrix& ma = ra(x / nb);
        const Matrix& mb = rb(x % nb);
        Matrix m(eta.dim, eta.dim);
        for (int i = 0; i < ra.dim; ++i)
          for (int j = 0; j < ra.dim; ++j) m.block(i * rb.dim, j * rb.dim, rb.dim, rb.dim) = ma(i, j) * mb;
        eta.matrices.push_back(std::move(m));
      }
      dual.irreps.push_back(std::move(eta));
    }
  return std::make_shared<const Group>(std::move(t), std::move(dual),
                                       "product:" + a->name() + "x" + b->name());
}

std::vector<std::string> check_group_invariants(const FiniteGroup& t, const UnitaryDual& dual,
                                                double algebraic_tol, double statistical_tol) {
  std::vector<std::string> v;
  const int n = t.order;
  if (n < 1) return {"order: group order must be positive"};
  if (t.identity < 0 || t.identity >= n) return {"identity: index out of range"};
  if (static_cast<int>(t.cayley.size()) != n * n) return {"cayley: table has wrong size"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int p = t.mul(x, y);
      if (p < 0 || p >= n) {
        v.push_back("cayley: entry (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
        return v;
      }
    }
  const int e = t.identity;
  for (int x = 0; x < n; ++x)
    if (t.mul(e, x) != x || t.mul(x, e) != x)
      v.push_back("identity: e*x or x*e differs from x at element " + std::to_string(x));
  if (static_cast<int>(t.inverse.size()) != n) {
    v.push_back("inverse: table has wrong size");
  } else {
    for (int x = 0; x < n; ++x) {
      const int xi = t.inverse[x];
      if (xi < 0 || xi >= n || t.mul(x, xi) != e || t.mul(xi, x) != e)
        v.push_back("inverse: element " + std::to_string(x) + " has no two-sided inverse");
    }
  }
  bool assoc_ok = true;
  for (int x = 0; x < n && assoc_ok; ++x)
    for (int y = 0; y < n && assoc_ok; ++y)
      for (int z = 0; z < n; ++z)
        if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))) {
          v.push_back("associativity: fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                      std::to_string(z) + ")");
          assoc_ok = false;
          break;
        }
  if (!v.empty()) return v;

  int dim_sq = 0;
  std::vector<std::vector<Complex>> chars;
  for (std::size_t k = 0; k < dual.irreps.size(); ++k) {
    const Irrep& eta = dual.irreps[k];
    const std::string tag = "irrep " + std::to_string(k);
    dim_sq += eta.dim * eta.dim;
    if (static_cast<int>(eta.matrices.size()) != n) {
      v.push_back(tag + ": expected " + std::to_string(n) + " matrices");
      chars.emplace_back(n, Complex{});
      continue;
    }
    bool shape_ok = true;
    for (int x = 0; x < n; ++x)
      if (eta.matrices[x].rows() != eta.dim || eta.matrices[x].cols() != eta.dim) {
        v.push_back(tag + ": matrix at element " + std::to_string(x) + " has wrong shape");
        shape_ok = false;
      }
    if (!shape_ok) {
      chars.emplace_back(n, Complex{});
      continue;
    }
    const Matrix id = Matrix::Identity(eta.dim, eta.dim);
    for (int x = 0; x < n; ++x) {
      const double defect = (eta.matrices[x] * eta.matrices[x].adjoint() - id).cwiseAbs().maxCoeff();
      if (defect > algebraic_tol)
        v.push_back("unitarity: " + tag + " at element " + std::to_string(x));
    }
    if ((eta.matrices[e] - id).cwiseAbs().maxCoeff() > algebraic_tol)
      v.push_back("identity-image: " + tag + " maps the identity away from I");
    bool hom_ok = true;
    for (int x = 0; x < n && hom_ok; ++x)
      for (int y = 0; y < n; ++y)
        if ((eta.matrices[t.mul(x, y)] - eta.matrices[x] * eta.matrices[y]).cwiseAbs().maxCoeff() >
            algebraic_tol) {
          v.push_back("homomorphism: " + tag + " at (" + std::to_string(x) + "," + std::to_string(y) + ")");
          hom_ok = false;
          break;
        }
    std::vector<Complex> chi(n);
    double norm = 0.0;
    for (int x = 0; x < n; ++x) {
      chi[x] = eta.matrices[x].trace();
      norm += std::norm(chi[x]);
    }
    if (std::abs(norm / n - 1.0) > statistical_tol) v.push_back("irreducibility: " + tag);
    chars.push_back(std::move(chi));
  }
  if (dim_sq != n)
    v.push_back("completeness: sum of squared dimensions is " + std::to_string(dim_sq) + ", order is " +
                std::to_string(n));
  for (std::size_t a = 0; a < chars.size(); ++a)
    for (std::size_t b = a + 1; b < chars.size(); ++b) {
      Complex s{};
      for (int x = 0; x < n; ++x) s += chars[a][x] * std::conj(chars[b][x]);
      if (std::abs(s) / n > statistical_tol)
        v.push_back("inequivalence: irreps " + std::to_string(a) + " and " + std::to_string(b));
    }
  const int ti = dual.trivial_index;
  if (ti < 0 || ti >= static_cast<int>(dual.irreps.size())) {
    v.push_back("trivial: trivial irrep index out of range");
  } else {
    const Irrep& eps = dual.irreps[ti];
    bool ok = eps.dim == 1 && static_cast<int>(eps.matrices.size()) == n;
    for (int x = 0; ok && x < n; ++x)
      ok = eps.matrices[x].size() == 1 && std::abs(eps.matrices[x](0, 0) - 1.0) <= algebraic_tol;
    if (!ok) v.push_back("trivial: irrep " + std::to_string(ti) + " is not the trivial representation");
  }
  return v;
}

namespace {

struct LineReader {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  std::size_t pos = 0;

  explicit LineReader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::istringstream ls(line);
      std::vector<std::string> toks;
      for (std::string tok; ls >> tok;) toks.push_back(tok);
      if (!toks.empty()) lines.emplace_back(no, std::move(toks));
    }
  }

  const std::pair<int, std::vector<std::string>>& next(const char* expecting) {
    if (pos >= lines.size())
      throw ParseError(std::string("unexpected end of file, expecting ") + expecting,
                       lines.empty() ? 0 : lines.back().first);
    return lines[pos++];
  }
};

long parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + tok + "'", line);
  }
  if (used != tok.size()) throw ParseError("expected integer, got '" + tok + "'", line);
  return v;
}

double parse_real(const std::string& tok, int line) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected number, got '" + tok + "'", line);
  }
  if (used != tok.size()) throw ParseError("expected number, got '" + tok + "'", line);
  return v;
}

int keyword_value(const std::pair<int, std::vector<std::string>>& l, const std::string& key) {
  if (l.second.size() != 2 || l.second[0] != key)
    throw ParseError("expected '" + key + " <integer>'", l.first);
  return static_cast<int>(parse_int(l.second[1], l.first));
}

}  // namespace

GroupPtr parse_group_text(std::string_view text, const std::string& name) {
  LineReader r(text);
  FiniteGroup t;
  t.order = keyword_value(r.next("group header"), "group");
  if (t.order < 1) throw ParseError("group order must be positive", r.lines[0].first);
  t.identity = keyword_value(r.next("identity line"), "identity");
  const int n = t.order;
  t.cayley.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const auto& l = r.next("Cayley table row");
    if (static_cast<int>(l.second.size()) != n)
      throw ParseError("Cayley row " + std::to_string(x) + " needs " + std::to_string(n) + " entries", l.first);
    for (const auto& tok : l.second) t.cayley.push_back(static_cast<int>(parse_int(tok, l.first)));
  }
  const int count = keyword_value(r.next("irreps line"), "irreps");
  UnitaryDual dual;
  for (int k = 0; k < count; ++k) {
    Irrep eta;
    const auto& dl = r.next("dim line");
    eta.dim = keyword_value(dl, "dim");
    if (eta.dim < 1) throw ParseError("irrep dimension must be positive", dl.first);
    for (int x = 0; x < n; ++x) {
      Matrix m(eta.dim, eta.dim);
      for (int row = 0; row < eta.dim; ++row) {
        const auto& l = r.next("matrix row");
        if (static_cast<int>(l.second.size()) != 2 * eta.dim)
          throw ParseError("matrix row needs " + std::to_string(eta.dim) + " 're im' pairs", l.first);
        for (int c = 0; c < eta.dim; ++c)
          m(row, c) = Complex(parse_real(l.second[2 * c], l.first), parse_real(l.second[2 * c + 1], l.first));
      }
      eta.matrices.push_back(std::move(m));
    }
    dual.irreps.push_back(std::move(eta));
  }
  if (r.pos != r.lines.size()) throw ParseError("trailing content after last irrep", r.lines[r.pos].first);

  // inverse table from the Cayley table; a missing inverse is reported by the checker
  t.inverse.assign(n, -1);
  if (t.identity >= 0 && t.identity < n)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int p = t.cayley[static_cast<std::size_t>(x) * n + y];
        if (p == t.identity) {
          t.inverse[x] = y;
          break;
        }
      }

  // trivial irrep: the first one-dimensional irrep with all entries 1
  dual.trivial_index = -1;
  for (int k = 0; k < count && dual.trivial_index < 0; ++k) {
    const Irrep& eta = dual.irreps[k];
    bool ok = eta.dim == 1;
    for (int x = 0; ok && x < n; ++x) ok = std::abs(eta.matrices[x](0, 0) - 1.0) <= 1e-10;
    if (ok) dual.trivial_index = k;
  }

  auto violations = check_group_invariants(t, dual);
  if (!violations.empty()) throw InvariantError(std::move(violations));
  return std::make_shared<const Group>(std::move(t), std::move(dual), name);
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str(), "file:" + path);
}

std::string format_group_text(const Group& g) {
  std::ostringstream out;
  out.precision(17);
  const int n = g.order();
  out << "group " << n << "\nidentity " << g.identity() << "\n";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) out << (y ? " " : "") << g.mul(x, y);
    out << "\n";
  }
  out << "irreps " << g.irrep_count() << "\n";
  for (int k = 0; k < g.irrep_count(); ++k) {
    const Irrep& eta = g.irrep(k);
    out << "dim " << eta.dim << "\n";
    for (int x = 0; x < n; ++x)
      for (int r = 0; r < eta.dim; ++r) {
        for (int c = 0; c < eta.dim; ++c)
          out << (c ? " " : "") << eta(x)(r, c).real() << " " << eta(x)(r, c).imag();
        out << "\n";
      }
  }
  return out.str();
}

double schur_orthogonality_defect(const Group& g) {
  const int n = g.order();
  double worst = 0.0;
  for (int e = 0; e < g.irrep_count(); ++e) {
    const Irrep& eta = g.irrep(e);
    const int d = eta.dim;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          for (int m = 0; m < d; ++m) {
            Complex s{};
            for (int x = 0; x < n; ++x) s += eta(x)(j, k) * std::conj(eta(x)(l, m));
            s /= static_cast<double>(n);
            const double expect = (j == l && k == m) ? 1.0 / d : 0.0;
            worst = std::max(worst, std::abs(s - expect));
          }
  }
  return worst;
}

std::vector<std::vector<Complex>> character_table(const Group& g) {
  std::vector<std::vector<Complex>> chi(g.irrep_count(), std::vector<Complex>(g.order()));
  for (int e = 0; e < g.irrep_count(); ++e)
    for (int x = 0; x < g.order(); ++x) chi[e][x] = g.irrep(e).character(x);
  return chi;
}

std::vector<int> contragredient_map(const Group& g, double tol) {
  const int n = g.order();
  const auto chi = character_table(g);
  std::vector<int> out(g.irrep_count(), -1);
  for (int e = 0; e < g.irrep_count(); ++e) {
    // character of x -> eta(x^{-1})^T is chi(x^{-1})
    for (int f = 0; f < g.irrep_count() && out[e] < 0; ++f) {
      double diff = 0.0;
      for (int x = 0; x < n; ++x) diff = std::max(diff, std::abs(chi[e][g.inv(x)] - chi[f][x]));
      if (diff <= tol) out[e] = f;
    }
  }
  return out;
}

}  // namespace gtfa
