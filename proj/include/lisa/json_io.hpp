#ifndef LISA_JSON_IO_HPP
#define LISA_JSON_IO_HPP

#include <json.hpp>

#include "lisa/finverse.hpp"
#include "lisa/paction.hpp"

namespace lisa {

using json = nlohmann::json;

inline constexpr const char* kSchema = "lisa/1";

// ---------------------------------------------------------------------------
// fields

inline json field_to_json(const RationalField&) {
  return json{{"kind", "rationals"}, {"characteristic", 0}};
}

inline json field_to_json(const PrimeField& f) {
  return json{{"kind", "prime_field"}, {"characteristic", f.characteristic()}};
}

struct FieldSpec {
  bool rationals = true;
  uint64_t p = 0;
};

inline FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("field: expected an object with 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return FieldSpec{true, 0};
  if (kind == "prime_field") {
    if (!j.contains("characteristic")) throw ParseError("prime field needs 'characteristic'");
    return FieldSpec{false, j.at("characteristic").get<uint64_t>()};
  }
  throw ParseError("unknown field kind: " + kind);
}

// ---------------------------------------------------------------------------
// matrices, vectors, subspaces

template <class F>
json matrix_to_json(const Matrix<F>& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const json& j, std::optional<size_t> want_cols = {}) {
  if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
  size_t rows = j.size();
  size_t cols = want_cols.value_or(rows ? j.at(0).size() : 0);
  Matrix<F> m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || row.size() != cols) throw ParseError("matrix: ragged rows");
    for (size_t c = 0; c < cols; ++c) m.at(i, c) = f.parse(row.at(c).get<std::string>());
  }
  return m;
}

template <class F>
json vec_to_json(const Vec<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

template <class F>
Vec<F> vec_from_json(const F& f, const json& j) {
  if (!j.is_array()) throw ParseError("vector: expected an array");
  Vec<F> v;
  for (const auto& x : j) v.push_back(f.parse(x.get<std::string>()));
  return v;
}

template <class F>
json subspace_to_json(const Subspace<F>& s) {
  return json{{"ambient", s.ambient_dim()}, {"basis", matrix_to_json(s.basis())}};
}

template <class F>
Subspace<F> subspace_from_json(const F& f, const json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("basis"))
    throw ParseError("subspace: expected {ambient, basis}");
  size_t ambient = j.at("ambient").get<size_t>();
  Matrix<F> gens = matrix_from_json(f, j.at("basis"), ambient);
  return Subspace<F>::span(gens);
}

// ---------------------------------------------------------------------------
// algebras

template <class F>
json algebra_to_json(const StructAlgebra<F>& a) {
  json products = json::array();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      json out = json::array();
      for (size_t k = 0; k < a.dim(); ++k)
        if (!a.c(i, j, k).is_zero()) out.push_back(json::array({k, a.c(i, j, k).str()}));
      if (!out.empty())
        products.push_back(json{{"i", i}, {"j", j}, {"out", std::move(out)}});
    }
  return json{{"schema", kSchema},
              {"field", field_to_json(a.field())},
              {"dim", a.dim()},
              {"flavor", flavor_name(a.flavor())},
              {"products", std::move(products)}};
}

inline Flavor flavor_from_name(const std::string& s) {
  if (s == "general") return Flavor::general;
  if (s == "associative") return Flavor::associative;
  if (s == "lie") return Flavor::lie;
  throw ParseError("unknown flavor: " + s);
}

template <class F>
StructAlgebra<F> algebra_from_json(const F& f, const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("flavor"))
    throw ParseError("algebra: expected {field, dim, flavor, products}");
  size_t dim = j.at("dim").get<size_t>();
  Flavor flavor = flavor_from_name(j.at("flavor").get<std::string>());
  std::vector<typename F::Element> table(dim * dim * dim, f.zero());
  if (j.contains("products")) {
    for (const auto& p : j.at("products")) {
      size_t i = p.at("i").get<size_t>(), jj = p.at("j").get<size_t>();
      if (i >= dim || jj >= dim) throw ParseError("product index out of range");
      for (const auto& term : p.at("out")) {
        size_t k = term.at(0).get<size_t>();
        if (k >= dim) throw ParseError("product output index out of range");
        table[(i * dim + jj) * dim + k] = f.parse(term.at(1).get<std::string>());
      }
    }
  }
  return StructAlgebra<F>::make(f, dim, flavor, std::move(table));
}

// ---------------------------------------------------------------------------
// partial maps, E(L) elements

template <class F>
json partial_endo_to_json(const PartialEndo<F>& pe) {
  return json{{"domain", subspace_to_json(pe.domain())},
              {"action", matrix_to_json(pe.action())}};
}

template <class F>
PartialEndo<F> partial_endo_from_json(const F& f, const json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("action"))
    throw ParseError("partial map: expected {domain, action}");
  Subspace<F> dom = subspace_from_json(f, j.at("domain"));
  Matrix<F> act = matrix_from_json(f, j.at("action"), dom.dim());
  if (act.rows() != dom.ambient_dim()) throw ParseError("action/domain shape mismatch");
  return PartialEndo<F>::make(std::move(dom), std::move(act));
}

template <class F>
json el_to_json(const ELElement<F>& e) {
  return json{{"A", subspace_to_json(e.A)}, {"a", vec_to_json(e.a)}};
}

template <class F>
ELElement<F> el_from_json(const ELCarrier<F>& c, const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("a"))
    throw ParseError("E(L) element: expected {A, a}");
  return c.make(subspace_from_json(c.field(), j.at("A")),
                vec_from_json(c.field(), j.at("a")));
}

// ---------------------------------------------------------------------------
// semilattices, presheaves, representations

inline json semilattice_to_json(const MeetSemilattice& l) {
  json meet = json::array();
  for (size_t i = 0; i < l.size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < l.size(); ++j) row.push_back(l.id(l.meet((int)i, (int)j)));
    meet.push_back(std::move(row));
  }
  json out{{"elements", l.ids()}, {"meet", std::move(meet)}};
  if (l.unit()) out["unit"] = l.id(*l.unit());
  return out;
}

inline MeetSemilattice semilattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("meet"))
    throw ParseError("semilattice: expected {elements, meet}");
  std::vector<std::string> ids = j.at("elements").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], (int)i);
  if (index.size() != ids.size()) throw ParseError("semilattice: duplicate element ids");
  std::vector<int> meet(ids.size() * ids.size());
  const auto& mj = j.at("meet");
  if (mj.size() != ids.size()) throw ParseError("semilattice: meet table shape");
  for (size_t i = 0; i < ids.size(); ++i) {
    if (mj.at(i).size() != ids.size()) throw ParseError("semilattice: meet table shape");
    for (size_t k = 0; k < ids.size(); ++k) {
      auto it = index.find(mj.at(i).at(k).get<std::string>());
      if (it == index.end()) throw ParseError("semilattice: unknown id in meet table");
      meet[i * ids.size() + k] = it->second;
    }
  }
  std::optional<int> unit;
  if (j.contains("unit")) {
    auto it = index.find(j.at("unit").get<std::string>());
    if (it == index.end()) throw ParseError("semilattice: unknown unit id");
    unit = it->second;
  }
  return MeetSemilattice::make(std::move(ids), std::move(meet), unit);
}

template <class F>
json presheaf_to_json(const Presheaf<F>& p) {
  json objects = json::object();
  for (size_t i = 0; i < p.base().size(); ++i)
    objects[p.base().id((int)i)] = algebra_to_json(p.object((int)i));
  json restrictions = json::array();
  for (const auto& [key, m] : p.restrictions())
    restrictions.push_back(json{{"from", p.base().id(key.first)},
                                {"to", p.base().id(key.second)},
                                {"hom", matrix_to_json(m)}});
  return json{{"schema", kSchema},
              {"base", semilattice_to_json(p.base())},
              {"objects", std::move(objects)},
              {"restrictions", std::move(restrictions)}};
}

template <class F>
Presheaf<F> presheaf_from_json(const F& f, const json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("objects"))
    throw ParseError("presheaf: expected {base, objects, restrictions}");
  MeetSemilattice base = semilattice_from_json(j.at("base"));
  std::vector<StructAlgebra<F>> objects;
  for (size_t i = 0; i < base.size(); ++i) {
    const std::string& id = base.id((int)i);
    if (!j.at("objects").contains(id)) throw ParseError("presheaf: missing object " + id);
    objects.push_back(algebra_from_json(f, j.at("objects").at(id)));
  }
  std::map<std::pair<int, int>, Matrix<F>> restr;
  if (j.contains("restrictions"))
    for (const auto& r : j.at("restrictions")) {
      int from = base.index_of(r.at("from").get<std::string>());
      int to = base.index_of(r.at("to").get<std::string>());
      restr.emplace(std::make_pair(from, to),
                    matrix_from_json(f, r.at("hom"), objects[from].dim()));
    }
  return Presheaf<F>::make(std::move(base), std::move(objects), std::move(restr));
}

inline json partial_rep_to_json(const PartialRep& r) {
  json action = json::array();
  uint64_t nv = pow_u64(r.algebra()->field().characteristic(), r.algebra()->dim());
  for (uint64_t vi = 0; vi < nv; ++vi) {
    auto a = vec_from_index(r.algebra()->field(), r.algebra()->dim(), vi);
    for (size_t li = 0; li < r.lattice().size(); ++li)
      action.push_back(json{{"a", vec_to_json(a)},
                            {"lambda", r.lattice().id((int)li)},
                            {"out", r.lattice().id(r.act(vi, (int)li))}});
  }
  return json{{"schema", kSchema},
              {"L", algebra_to_json(*r.algebra())},
              {"lattice", semilattice_to_json(r.lattice())},
              {"action", std::move(action)}};
}

inline PartialRep partial_rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("L") || !j.contains("lattice") || !j.contains("action"))
    throw ParseError("partial representation: expected {L, lattice, action}");
  FieldSpec fs = field_from_json(j.at("L").at("field"));
  if (fs.rationals) throw ParseError("partial representation tables need a prime field");
  PrimeField f(fs.p);
  auto L = std::make_shared<StructAlgebra<PrimeField>>(algebra_from_json(f, j.at("L")));
  MeetSemilattice lat = semilattice_from_json(j.at("lattice"));
  uint64_t nv = pow_u64(f.characteristic(), L->dim());
  std::vector<int> table(nv * lat.size(), -1);
  for (const auto& e : j.at("action")) {
    auto a = vec_from_json(f, e.at("a"));
    if (a.size() != L->dim()) throw ParseError("action entry: wrong vector length");
    int li = lat.index_of(e.at("lambda").get<std::string>());
    int out = lat.index_of(e.at("out").get<std::string>());
    table[vec_index(a) * lat.size() + li] = out;
  }
  for (int v : table)
    if (v < 0) throw ParseError("action table does not cover all of L x Lambda");
  return PartialRep::make(std::move(L), std::move(lat), std::move(table));
}

// ---------------------------------------------------------------------------
// partial actions

template <class F>
json partial_action_entry_to_json(const PartialDerivation<F>& d) {
  return json{{"D", subspace_to_json(d.domain())},
              {"theta", matrix_to_json(d.map().action())}};
}

inline json partial_action_to_json(const PartialAction<PrimeField>& pa) {
  const PrimeField& f = pa.source()->field();
  json entries = json::array();
  for (const auto& x : all_vectors(f, pa.source()->dim())) {
    auto th = pa.theta(x);
    json e = partial_action_entry_to_json(th);
    e["x"] = vec_to_json(x);
    entries.push_back(std::move(e));
  }
  return json{{"schema", kSchema},
              {"L", algebra_to_json(*pa.source())},
              {"A", algebra_to_json(*pa.base())},
              {"entries", std::move(entries)}};
}

inline PartialAction<PrimeField> partial_action_from_json(const json& j) {
  if (!j.is_object() || !j.contains("L") || !j.contains("A") || !j.contains("entries"))
    throw ParseError("partial action: expected {L, A, entries}");
  FieldSpec fs = field_from_json(j.at("L").at("field"));
  if (fs.rationals) throw ParseError("partial action tables need a prime field");
  PrimeField f(fs.p);
  auto L = std::make_shared<StructAlgebra<PrimeField>>(algebra_from_json(f, j.at("L")));
  auto A = std::make_shared<StructAlgebra<PrimeField>>(algebra_from_json(f, j.at("A")));
  uint64_t nv = pow_u64(f.characteristic(), L->dim());
  std::vector<std::optional<PartialDerivation<PrimeField>>> slots(nv);
  for (const auto& e : j.at("entries")) {
    auto x = vec_from_json(f, e.at("x"));
    if (x.size() != L->dim()) throw ParseError("entry vector length mismatch");
    Subspace<PrimeField> D = subspace_from_json(f, e.at("D"));
    Matrix<PrimeField> act = matrix_from_json(f, e.at("theta"), D.dim());
    slots[vec_index(x)] = PartialDerivation<PrimeField>::make(A, D, act);
  }
  std::vector<PartialDerivation<PrimeField>> table;
  for (auto& s : slots) {
    if (!s) throw ParseError("partial action table does not cover L");
    table.push_back(std::move(*s));
  }
  return PartialAction<PrimeField>::from_table(std::move(L), std::move(A), std::move(table));
}

// ---------------------------------------------------------------------------
// check reports

inline json axiom_result_to_json(const AxiomResult& r) {
  json out{{"axiom", r.axiom},
           {"description", r.description},
           {"verdict", verdict_name(r.verdict)}};
  if (r.verdict == Verdict::fail) out["counterexample"] = json{{"witness", r.counterexample}};
  if (r.verdict == Verdict::skipped) out["reason"] = r.skip_reason;
  return out;
}

inline json report_to_json(const CheckReport& rep) {
  json results = json::array();
  for (const auto& r : rep.results) results.push_back(axiom_result_to_json(r));
  json mode;
  if (rep.mode.exhaustive) {
    mode = "exhaustive";
  } else {
    mode = json{{"sampled", json{{"trials", rep.mode.trials}, {"seed", rep.mode.seed}}}};
  }
  return json{{"subject", rep.subject},
              {"mode", std::move(mode)},
              {"ok", rep.ok()},
              {"results", std::move(results)}};
}

inline json fixture_to_json(const FixtureReport& f) {
  return json{{"fixture", f.name}, {"pass", f.pass}, {"lines", f.lines}};
}

}  // namespace lisa

#endif
