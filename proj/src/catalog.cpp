#include "upknot/catalog.hpp"

#include <initializer_list>

namespace upknot {

namespace {

struct T1 {
  int e;
  long c;
};
struct T2 {
  int e1, e2;
  long c;
};

Laurent1 p1(std::initializer_list<T1> ts) {
  std::vector<Laurent1::Term> terms;
  for (const auto& t : ts) terms.push_back({2 * static_cast<Exp1>(t.e), rational(t.c)});
  return Laurent1::from_terms(std::move(terms));
}

Laurent2 p2(std::initializer_list<T2> ts) {
  std::vector<Laurent2::Term> terms;
  for (const auto& t : ts)
    terms.push_back({Exp2{2 * static_cast<std::int64_t>(t.e1),
                          2 * static_cast<std::int64_t>(t.e2)},
                     rational(t.c)});
  return Laurent2::from_terms(std::move(terms));
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  const Laurent1 one = p1({{0, 1}});
  const Laurent1 zero1 = Laurent1::zero();
  const Laurent2 zero2 = Laurent2::zero();

  out.push_back({"unknot", "unknot", "n 0\n", one, zero1, zero2});

  out.push_back({"kink-pos-over", "unknot",
                 "n 1\n"
                 "c + 2 1\n"
                 "phi 2 1\n",
                 one, zero1, zero2});
  out.push_back({"kink-pos-under", "unknot",
                 "n 1\n"
                 "c + 1 2\n"
                 "phi 2 -1\n",
                 one, zero1, zero2});
  out.push_back({"kink-neg-over", "unknot",
                 "n 1\n"
                 "c - 2 1\n"
                 "phi 2 -1\n",
                 one, zero1, zero2});
  out.push_back({"kink-neg-under", "unknot",
                 "n 1\n"
                 "c - 1 2\n"
                 "phi 2 1\n",
                 one, zero1, zero2});

  const Laurent1 trefoil_delta = p1({{-1, 1}, {0, -1}, {1, 1}});
  const Laurent1 trefoil_rho1 =
      p1({{-2, -1}, {-1, 2}, {0, -2}, {1, 2}, {2, -1}});
  const Laurent2 trefoil_theta = p2({{-2, -2, 1},
                                     {-2, -1, -1},
                                     {-2, 0, 1},
                                     {-1, -2, -1},
                                     {-1, 1, -1},
                                     {0, -2, 1},
                                     {0, 2, 1},
                                     {1, -1, -1},
                                     {1, 2, -1},
                                     {2, 0, 1},
                                     {2, 1, -1},
                                     {2, 2, 1}});

  out.push_back({"trefoil-a", "trefoil",
                 "n 3\n"
                 "c + 1 4\n"
                 "c + 3 6\n"
                 "c + 5 2\n"
                 "phi 4 -1\n",
                 trefoil_delta, trefoil_rho1, trefoil_theta});

  out.push_back({"trefoil-b", "trefoil",
                 "n 4\n"
                 "c + 1 4\n"
                 "c + 2 7\n"
                 "c + 5 8\n"
                 "c + 6 3\n"
                 "phi 4 -1\n"
                 "phi 7 -1\n",
                 trefoil_delta, trefoil_rho1, trefoil_theta});

  out.push_back({"figure-eight", "figure-eight",
                 "n 4\n"
                 "c + 1 4\n"
                 "c - 3 6\n"
                 "c + 5 8\n"
                 "c - 7 2\n"
                 "phi 4 -1\n"
                 "phi 7 -1\n",
                 p1({{-1, -1}, {0, 3}, {1, -1}}), zero1, zero2});

  out.push_back({"cinquefoil", "cinquefoil",
                 "n 5\n"
                 "c + 1 6\n"
                 "c + 3 8\n"
                 "c + 5 10\n"
                 "c + 7 2\n"
                 "c + 9 4\n"
                 "phi 6 -1\n",
                 p1({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}),
                 p1({{-4, -2}, {-3, 4}, {-2, -5}, {-1, 6}, {0, -6}, {1, 6}, {2, -5}, {3, 4}, {4, -2}}),
                 p2({{-4, -4, 2}, {-4, -3, -2}, {-4, -2, 2}, {-4, -1, -2}, {-4, 0, 2},
                     {-3, -4, -2}, {-3, 1, -2}, {-2, -4, 2}, {-2, -2, 1}, {-2, -1, -1},
                     {-2, 0, 1}, {-2, 2, 2}, {-1, -4, -2}, {-1, -2, -1}, {-1, 1, -1},
                     {-1, 3, -2}, {0, -4, 2}, {0, -2, 1}, {0, 2, 1}, {0, 4, 2},
                     {1, -3, -2}, {1, -1, -1}, {1, 2, -1}, {1, 4, -2}, {2, -2, 2},
                     {2, 0, 1}, {2, 1, -1}, {2, 2, 1}, {2, 4, 2}, {3, -1, -2},
                     {3, 4, -2}, {4, 0, 2}, {4, 1, -2}, {4, 2, 2}, {4, 3, -2},
                     {4, 4, 2}})});

  out.push_back({"trefoil-mirror", "trefoil-mirror",
                 "n 3\n"
                 "c - 2 5\n"
                 "c - 4 1\n"
                 "c - 6 3\n"
                 "phi 4 -1\n",
                 trefoil_delta,
                 p1({{-2, 1}, {-1, -2}, {0, 2}, {1, -2}, {2, 1}}),
                 p2({{-2, -2, -1},
                     {-2, -1, 1},
                     {-2, 0, -1},
                     {-1, -2, 1},
                     {-1, 1, 1},
                     {0, -2, -1},
                     {0, 2, -1},
                     {1, -1, 1},
                     {1, 2, 1},
                     {2, 0, -1},
                     {2, 1, 1},
                     {2, 2, -1}})});

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

UprightDiagram catalog_diagram(const std::string& name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) throw InputError("no catalog entry named '" + name + "'");
  return parse_diagram(e->udf);
}

}  // namespace upknot
