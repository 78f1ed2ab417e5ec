#include "qdl/qcat.hpp"

#include <algorithm>

#include "qdl/errors.hpp"

namespace qdl {

namespace {

void check_category_shape(const QCategory& a) {
  if (!a.q) throw Error(ErrorKind::ShapeError, "category has no quantale");
  const std::size_t n = a.objects.size();
  if (n == 0) throw Error(ErrorKind::ShapeError, "category needs at least one object");
  if (a.hom.size() != n) throw Error(ErrorKind::ShapeError, "hom must be n x n");
  for (const auto& row : a.hom) {
    if (row.size() != n) throw Error(ErrorKind::ShapeError, "ragged hom row");
    for (int v : row)
      if (v < 0 || v >= a.q->size())
        throw Error(ErrorKind::ShapeError, "hom entry out of quantale range");
  }
}

void check_same_quantale(const QCategory& a, const QCategory& b) {
  if (a.q.get() != b.q.get())
    throw Error(ErrorKind::Mismatch, "categories are enriched in different quantales");
}

void check_obj_map(const QCategory& a, const QCategory& b, const ObjMap& f) {
  if (static_cast<int>(f.size()) != a.size())
    throw Error(ErrorKind::ShapeError, "object map has wrong arity");
  for (int v : f)
    if (v < 0 || v >= b.size())
      throw Error(ErrorKind::ShapeError, "object map image out of range");
}

void check_vector(const QCategory& a, const std::vector<int>& v, const char* what) {
  if (static_cast<int>(v.size()) != a.size())
    throw Error(ErrorKind::ShapeError, std::string(what) + " has wrong arity");
  for (int e : v)
    if (e < 0 || e >= a.q->size())
      throw Error(ErrorKind::ShapeError, std::string(what) + " entry out of quantale range");
}

void check_object(const QCategory& a, int x) {
  if (x < 0 || x >= a.size()) throw Error(ErrorKind::UnknownElement, "object index out of range");
}

void check_element(const QCategory& a, int p) {
  if (p < 0 || p >= a.q->size())
    throw Error(ErrorKind::UnknownElement, "quantale element index out of range");
}

std::string vector_label(const FiniteQuantale& q, const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + q.label(v[i]);
  return s + ")";
}

// All vectors in |Q|^|A| passing `keep`, lexicographic in element indices.
template <typename Keep>
std::vector<std::vector<int>> enumerate_vectors(const QCategory& a, std::size_t cap,
                                                Keep keep, const char* what) {
  const std::size_t qn = static_cast<std::size_t>(a.q->size());
  std::size_t total = 1;
  for (int i = 0; i < a.size(); ++i) {
    if (total > cap / qn + 1) { total = cap + 1; break; }
    total *= qn;
  }
  if (total > cap)
    throw Error(ErrorKind::CapExceeded, std::string(what) + " enumeration needs |Q|^|A| > cap (" +
                                            std::to_string(cap) + ")");
  std::vector<std::vector<int>> out;
  std::vector<int> v(a.size(), 0);
  while (true) {
    if (keep(v)) out.push_back(v);
    int i = a.size() - 1;
    while (i >= 0 && v[i] + 1 == static_cast<int>(qn)) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

}  // namespace

int QCategory::object_index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (objects[i] == label) return i;
  throw Error(ErrorKind::UnknownElement, "no object '" + label + "'");
}

std::vector<CategoryViolation> validate_category(const QCategory& a) {
  check_category_shape(a);
  const FiniteQuantale& q = *a.q;
  std::vector<CategoryViolation> out;
  for (int x = 0; x < a.size(); ++x)
    if (!q.le(q.unit(), a(x, x)))
      out.push_back({"unit law k <= A(x,x)", {a.objects[x]}});
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      for (int z = 0; z < a.size(); ++z)
        if (!q.le(q.tensor(a(y, z), a(x, y)), a(x, z)))
          out.push_back({"composition law A(y,z) & A(x,y) <= A(x,z)",
                         {a.objects[x], a.objects[y], a.objects[z]}});
  return out;
}

std::vector<std::vector<bool>> underlying_preorder(const QCategory& a) {
  check_category_shape(a);
  std::vector<std::vector<bool>> le(a.size(), std::vector<bool>(a.size()));
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) le[x][y] = a.q->le(a.q->unit(), a(x, y));
  return le;
}

bool is_separated(const QCategory& a) {
  const auto le = underlying_preorder(a);
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (x != y && le[x][y] && le[y][x]) return false;
  return true;
}

std::vector<CategoryViolation> validate_functor(const QCategory& a, const QCategory& b,
                                                const ObjMap& f) {
  check_same_quantale(a, b);
  check_obj_map(a, b, f);
  std::vector<CategoryViolation> out;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (!a.q->le(a(x, y), b(f[x], f[y])))
        out.push_back({"functor law A(x,y) <= B(f x, f y)", {a.objects[x], a.objects[y]}});
  return out;
}

AdjunctionReport check_adjunction(const QCategory& a, const QCategory& b, const ObjMap& f,
                                  const ObjMap& g) {
  check_same_quantale(a, b);
  check_obj_map(a, b, f);
  check_obj_map(b, a, g);
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      if (b(f[x], y) != a(x, g[y]))
        return {false, {a.objects[x], b.objects[y]}};
  return {true, {}};
}

std::vector<CategoryViolation> validate_distributor(const QCategory& a, const QCategory& b,
                                                    const Distributor& phi) {
  check_same_quantale(a, b);
  if (static_cast<int>(phi.value.size()) != a.size())
    throw Error(ErrorKind::ShapeError, "distributor must have one row per source object");
  for (const auto& row : phi.value)
    if (static_cast<int>(row.size()) != b.size())
      throw Error(ErrorKind::ShapeError, "distributor row arity mismatch");
  const FiniteQuantale& q = *a.q;
  std::vector<CategoryViolation> out;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      for (int xp = 0; xp < a.size(); ++xp)
        for (int yp = 0; yp < b.size(); ++yp)
          if (!q.le(q.tensor(b(y, yp), q.tensor(phi.value[x][y], a(xp, x))), phi.value[xp][yp]))
            out.push_back({"distributor law B(y,y') & phi(x,y) & A(x',x) <= phi(x',y')",
                           {a.objects[x], b.objects[y], a.objects[xp], b.objects[yp]}});
  return out;
}

Distributor compose_distributors(const QCategory& a, const QCategory& b, const QCategory& c,
                                 const Distributor& phi, const Distributor& psi) {
  check_same_quantale(a, b);
  check_same_quantale(b, c);
  const FiniteQuantale& q = *a.q;
  Distributor out;
  out.value.assign(a.size(), std::vector<int>(c.size(), q.bottom()));
  for (int x = 0; x < a.size(); ++x)
    for (int z = 0; z < c.size(); ++z) {
      int acc = q.bottom();
      for (int y = 0; y < b.size(); ++y)
        acc = q.join(acc, q.tensor(psi.value[y][z], phi.value[x][y]));
      out.value[x][z] = acc;
    }
  return out;
}

Distributor graph(const QCategory& a, const QCategory& b, const ObjMap& f) {
  check_obj_map(a, b, f);
  Distributor out;
  out.value.assign(a.size(), std::vector<int>(b.size()));
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) out.value[x][y] = b(f[x], y);
  return out;
}

Distributor cograph(const QCategory& a, const QCategory& b, const ObjMap& f) {
  check_obj_map(a, b, f);
  Distributor out;
  out.value.assign(b.size(), std::vector<int>(a.size()));
  for (int y = 0; y < b.size(); ++y)
    for (int x = 0; x < a.size(); ++x) out.value[y][x] = b(y, f[x]);
  return out;
}

bool is_weight(const QCategory& a, const Weight& phi) {
  check_vector(a, phi, "weight");
  for (int x = 0; x < a.size(); ++x)
    for (int xp = 0; xp < a.size(); ++xp)
      if (!a.q->le(a.q->tensor(phi[x], a(xp, x)), phi[xp])) return false;
  return true;
}

bool is_coweight(const QCategory& a, const Coweight& psi) {
  check_vector(a, psi, "coweight");
  for (int x = 0; x < a.size(); ++x)
    for (int xp = 0; xp < a.size(); ++xp)
      if (!a.q->le(a.q->tensor(a(x, xp), psi[x]), psi[xp])) return false;
  return true;
}

int hom_weights(const QCategory& a, const Weight& phi, const Weight& rho) {
  check_vector(a, phi, "weight");
  check_vector(a, rho, "weight");
  int acc = a.q->top();
  for (int x = 0; x < a.size(); ++x) acc = a.q->meet(acc, a.q->residuum(phi[x], rho[x]));
  return acc;
}

int hom_coweights(const QCategory& a, const Coweight& psi, const Coweight& sigma) {
  check_vector(a, psi, "coweight");
  check_vector(a, sigma, "coweight");
  int acc = a.q->top();
  for (int x = 0; x < a.size(); ++x) acc = a.q->meet(acc, a.q->residuum(sigma[x], psi[x]));
  return acc;
}

std::vector<Weight> enumerate_weights(const QCategory& a, std::size_t cap) {
  check_category_shape(a);
  return enumerate_vectors(a, cap, [&](const Weight& v) { return is_weight(a, v); }, "weight");
}

std::vector<Coweight> enumerate_coweights(const QCategory& a, std::size_t cap) {
  check_category_shape(a);
  return enumerate_vectors(a, cap, [&](const Coweight& v) { return is_coweight(a, v); },
                           "coweight");
}

int WeightFamily::index_of(const std::vector<int>& v) const {
  const auto it = std::find(vectors.begin(), vectors.end(), v);
  if (it == vectors.end())
    throw Error(ErrorKind::UnknownElement, "vector is not in the enumerated family");
  return static_cast<int>(it - vectors.begin());
}

WeightFamily presheaf_category(const QCategory& a, std::size_t cap) {
  WeightFamily fam;
  fam.vectors = enumerate_weights(a, cap);
  fam.category.q = a.q;
  const int n = static_cast<int>(fam.vectors.size());
  fam.category.objects.reserve(n);
  for (const auto& v : fam.vectors) fam.category.objects.push_back(vector_label(*a.q, v));
  fam.category.hom.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fam.category.hom[i][j] = hom_weights(a, fam.vectors[i], fam.vectors[j]);
  return fam;
}

WeightFamily copresheaf_category(const QCategory& a, std::size_t cap) {
  WeightFamily fam;
  fam.vectors = enumerate_coweights(a, cap);
  fam.category.q = a.q;
  const int n = static_cast<int>(fam.vectors.size());
  fam.category.objects.reserve(n);
  for (const auto& v : fam.vectors) fam.category.objects.push_back(vector_label(*a.q, v));
  fam.category.hom.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fam.category.hom[i][j] = hom_coweights(a, fam.vectors[i], fam.vectors[j]);
  return fam;
}

Weight yoneda(const QCategory& a, int x) {
  check_category_shape(a);
  check_object(a, x);
  Weight phi(a.size());
  for (int y = 0; y < a.size(); ++y) phi[y] = a(y, x);
  return phi;
}

Coweight coyoneda(const QCategory& a, int x) {
  check_category_shape(a);
  check_object(a, x);
  Coweight psi(a.size());
  for (int y = 0; y < a.size(); ++y) psi[y] = a(x, y);
  return psi;
}

namespace {

// Exhaustive scan for an object z whose hom row/column matches `target`.
template <typename HomAt>
ObjectSearch scan_for_object(const QCategory& a, const std::vector<int>& target, HomAt hom_at) {
  ObjectSearch result;
  for (int z = 0; z < a.size(); ++z) {
    bool match = true;
    for (int y = 0; y < a.size(); ++y)
      if (hom_at(z, y) != target[y]) { match = false; break; }
    if (match) {
      if (!result.object) result.object = z;
      else result.unique = false;
    }
  }
  return result;
}

}  // namespace

ObjectSearch tensor_object(const QCategory& a, int p, int x) {
  check_category_shape(a);
  check_element(a, p);
  check_object(a, x);
  std::vector<int> target(a.size());
  for (int y = 0; y < a.size(); ++y) target[y] = a.q->residuum(p, a(x, y));
  return scan_for_object(a, target, [&](int z, int y) { return a(z, y); });
}

ObjectSearch cotensor_object(const QCategory& a, int p, int x) {
  check_category_shape(a);
  check_element(a, p);
  check_object(a, x);
  std::vector<int> target(a.size());
  for (int y = 0; y < a.size(); ++y) target[y] = a.q->residuum(p, a(y, x));
  return scan_for_object(a, target, [&](int z, int y) { return a(y, z); });
}

ObjectSearch sup_weight(const QCategory& a, const Weight& phi) {
  check_category_shape(a);
  check_vector(a, phi, "weight");
  // A(sup phi, y) must equal PA(phi, y(y)) = meet_u phi(u) -> A(u, y).
  std::vector<int> target(a.size());
  for (int y = 0; y < a.size(); ++y) {
    int acc = a.q->top();
    for (int u = 0; u < a.size(); ++u)
      acc = a.q->meet(acc, a.q->residuum(phi[u], a(u, y)));
    target[y] = acc;
  }
  return scan_for_object(a, target, [&](int z, int y) { return a(z, y); });
}

ObjectSearch inf_coweight(const QCategory& a, const Coweight& psi) {
  check_category_shape(a);
  check_vector(a, psi, "coweight");
  // A(y, inf psi) must equal P'A(y'(y), psi) = meet_u psi(u) -> A(y, u).
  std::vector<int> target(a.size());
  for (int y = 0; y < a.size(); ++y) {
    int acc = a.q->top();
    for (int u = 0; u < a.size(); ++u)
      acc = a.q->meet(acc, a.q->residuum(psi[u], a(y, u)));
    target[y] = acc;
  }
  return scan_for_object(a, target, [&](int z, int y) { return a(y, z); });
}

Weight presheaf_action(const QCategory& a, const QCategory& b, const ObjMap& f,
                       const Weight& phi) {
  check_obj_map(a, b, f);
  check_vector(a, phi, "weight");
  Weight out(b.size());
  for (int y = 0; y < b.size(); ++y) {
    int acc = a.q->bottom();
    for (int x = 0; x < a.size(); ++x)
      acc = a.q->join(acc, a.q->tensor(phi[x], b(y, f[x])));
    out[y] = acc;
  }
  return out;
}

Coweight copresheaf_action(const QCategory& a, const QCategory& b, const ObjMap& f,
                           const Coweight& psi) {
  check_obj_map(a, b, f);
  check_vector(a, psi, "coweight");
  Coweight out(b.size());
  for (int y = 0; y < b.size(); ++y) {
    int acc = a.q->bottom();
    for (int x = 0; x < a.size(); ++x)
      acc = a.q->join(acc, a.q->tensor(b(f[x], y), psi[x]));
    out[y] = acc;
  }
  return out;
}

Weight collapse_weight_of_weights(const QCategory& a, const WeightFamily& pa,
                                  const Weight& big_phi) {
  check_vector(pa.category, big_phi, "weight of weights");
  Weight out(a.size());
  for (int x = 0; x < a.size(); ++x) {
    int acc = a.q->bottom();
    for (std::size_t i = 0; i < pa.vectors.size(); ++i)
      acc = a.q->join(acc, a.q->tensor(big_phi[i], pa.vectors[i][x]));
    out[x] = acc;
  }
  return out;
}

ObjMap presheaf_mult(const QCategory& a, const WeightFamily& pa, const WeightFamily& ppa) {
  ObjMap mult(ppa.vectors.size());
  for (std::size_t i = 0; i < ppa.vectors.size(); ++i)
    mult[i] = pa.index_of(collapse_weight_of_weights(a, pa, ppa.vectors[i]));
  return mult;
}

QCategory opposite(const QCategory& a) {
  check_category_shape(a);
  QCategory op;
  op.q = a.q;
  op.objects = a.objects;
  op.hom.assign(a.size(), std::vector<int>(a.size()));
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) op.hom[x][y] = a(y, x);
  return op;
}

QCategory self_enriched_category(QuantalePtr q) {
  if (!q) throw Error(ErrorKind::ShapeError, "null quantale");
  QCategory a;
  a.q = q;
  a.objects = q->labels();
  const int n = q->size();
  a.hom.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.hom[x][y] = q->residuum(x, y);
  return a;
}

}  // namespace qdl
