#include "fincat/fixtures.hpp"

namespace fincat {

FiniteGraph point_graph() {
  FiniteGraph g{FiniteSet({"*"})};
  g.set_hom(0, 0, FiniteSet({"1"}));
  return g;
}

FiniteGraph bare_arrow_graph() {
  FiniteGraph g{FiniteSet({"u", "v"})};
  g.set_hom(0, 1, FiniteSet({"a"}));
  return g;
}

OriginalGraph walking_arrow() {
  FiniteGraph g{FiniteSet({"0", "1"})};
  g.set_hom(0, 0, FiniteSet({"id0"}));
  g.set_hom(1, 1, FiniteSet({"id1"}));
  g.set_hom(0, 1, FiniteSet({"a"}));
  GraphPtr gp = share(std::move(g));
  std::vector<std::vector<std::size_t>> tables(8);
  tables[(0 * 2 + 0) * 2 + 0] = {0};  // id0.id0 = id0
  tables[(0 * 2 + 0) * 2 + 1] = {0};  // id0.a = a
  tables[(0 * 2 + 1) * 2 + 1] = {0};  // a.id1 = a
  tables[(1 * 2 + 1) * 2 + 1] = {0};  // id1.id1 = id1
  ContactTable contact(gp, std::move(tables));
  UnitChoice units(gp, {0, 0});
  return OriginalGraph{gp, std::move(units), std::move(contact)};
}

OriginalGraph composable_pair() {
  FiniteGraph g{FiniteSet({"0", "1", "2"})};
  g.set_hom(0, 0, FiniteSet({"id0"}));
  g.set_hom(1, 1, FiniteSet({"id1"}));
  g.set_hom(2, 2, FiniteSet({"id2"}));
  g.set_hom(0, 1, FiniteSet({"f"}));
  g.set_hom(1, 2, FiniteSet({"g"}));
  g.set_hom(0, 2, FiniteSet({"fg"}));
  GraphPtr gp = share(std::move(g));
  const std::size_t n = 3;
  std::vector<std::vector<std::size_t>> tables(n * n * n);
  auto cell = [&](std::size_t a, std::size_t b, std::size_t c)
      -> std::vector<std::size_t>& { return tables[(a * n + b) * n + c]; };
  for (std::size_t a = 0; a < n; ++a) cell(a, a, a) = {0};
  cell(0, 0, 1) = {0};  // id0.f = f
  cell(0, 1, 1) = {0};  // f.id1 = f
  cell(1, 1, 2) = {0};  // id1.g = g
  cell(1, 2, 2) = {0};  // g.id2 = g
  cell(0, 0, 2) = {0};  // id0.fg = fg
  cell(0, 2, 2) = {0};  // fg.id2 = fg
  cell(0, 1, 2) = {0};  // f.g = fg
  ContactTable contact(gp, std::move(tables));
  UnitChoice units(gp, {0, 0, 0});
  return OriginalGraph{gp, std::move(units), std::move(contact)};
}

OriginalGraph z2_category() {
  return one_object_original(FiniteSet({"1", "g"}),
                             {{0, 1}, {1, 0}}, 0);
}

void enumerate_unital_magmas(
    std::size_t order, Budget& budget,
    const std::function<bool(const std::vector<std::vector<std::size_t>>&)>&
        fn) {
  if (order == 0) return;
  const std::size_t free_cells = (order - 1) * (order - 1);
  std::vector<std::size_t> radices(free_cells, order);
  for_each_tuple(radices, budget, [&](const std::vector<std::size_t>& digits) {
    std::vector<std::vector<std::size_t>> table(
        order, std::vector<std::size_t>(order));
    for (std::size_t j = 0; j < order; ++j) table[0][j] = j;
    for (std::size_t i = 0; i < order; ++i) table[i][0] = i;
    std::size_t slot = 0;
    for (std::size_t i = 1; i < order; ++i)
      for (std::size_t j = 1; j < order; ++j) table[i][j] = digits[slot++];
    return fn(table);
  });
}

OriginalGraph m3_magma() {
  std::vector<std::vector<std::size_t>> found;
  Budget budget;
  enumerate_unital_magmas(
      3, budget, [&](const std::vector<std::vector<std::size_t>>& table) {
        for (std::size_t x = 0; x < 3; ++x)
          for (std::size_t y = 0; y < 3; ++y)
            for (std::size_t z = 0; z < 3; ++z)
              if (table[table[x][y]][z] != table[x][table[y][z]]) {
                found = table;
                return false;
              }
        return true;
      });
  if (found.empty()) throw Error("no non-associative unital magma of order 3");
  return one_object_original(FiniteSet({"1", "a", "b"}), found, 0);
}

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
  FiniteSet carrier = FiniteSet::range(n, "p");
  std::vector<FinitePoset> out;
  const std::size_t cells = n * n;
  for (std::size_t mask = 0; mask < (std::size_t(1) << cells); ++mask) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = (mask >> (i * n + j)) & 1;
    bool refl = true;
    for (std::size_t i = 0; i < n; ++i) refl = refl && m[i][i];
    if (!refl) continue;
    try {
      out.push_back(FinitePoset(carrier, m));
    } catch (const Error&) {
    }
  }
  return out;
}

void enumerate_graphs(std::size_t vertices, std::size_t max_edges_per_hom,
                      Budget& budget,
                      const std::function<bool(const FiniteGraph&)>& fn) {
  FiniteSet vs = FiniteSet::range(vertices, "v");
  std::vector<std::size_t> radices(vertices * vertices,
                                   max_edges_per_hom + 1);
  for_each_tuple(radices, budget, [&](const std::vector<std::size_t>& sizes) {
    FiniteGraph g{vs};
    for (std::size_t a = 0; a < vertices; ++a)
      for (std::size_t b = 0; b < vertices; ++b)
        g.set_hom(a, b, FiniteSet::range(sizes[a * vertices + b], "e"));
    return fn(g);
  });
}

void enumerate_contact_tables(
    GraphPtr g, Budget& budget,
    const std::function<bool(const ContactTable&)>& fn) {
  const std::size_t n = g->order();
  std::vector<std::size_t> radices;
  struct Slot {
    std::size_t a, b, c;
    std::size_t cells;
  };
  std::vector<Slot> slots;
  bool impossible = false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t cells = g->hom(a, b).size() * g->hom(b, c).size();
        const std::size_t target = g->hom(a, c).size();
        slots.push_back({a, b, c, cells});
        if (cells > 0 && target == 0) impossible = true;
        for (std::size_t i = 0; i < cells; ++i) radices.push_back(target);
      }
  if (impossible) return;
  for_each_tuple(radices, budget, [&](const std::vector<std::size_t>& digits) {
    std::vector<std::vector<std::size_t>> tables(n * n * n);
    std::size_t pos = 0;
    for (const Slot& s : slots) {
      auto& cell = tables[(s.a * n + s.b) * n + s.c];
      cell.assign(digits.begin() + pos, digits.begin() + pos + s.cells);
      pos += s.cells;
    }
    return fn(ContactTable(g, std::move(tables)));
  });
}

void enumerate_characters(const OriginalGraph& X,
                          const std::vector<std::size_t>& value_sizes,
                          Budget& budget,
                          const std::function<bool(const Character&)>& fn) {
  const FiniteGraph& g = *X.graph;
  const std::size_t n = g.order();
  if (value_sizes.size() != n)
    throw Error("enumerate_characters: one value size per vertex");
  std::vector<FiniteSet> values(n);
  for (std::size_t v = 0; v < n; ++v)
    values[v] = FiniteSet::range(value_sizes[v], "m");
  // slots: for edge h in X(b;a) and point of F0(a), a value in F0(b)
  struct Slot {
    std::size_t b, a, edge, point;
  };
  std::vector<Slot> slots;
  std::vector<std::size_t> radices;
  bool impossible = false;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t h = 0; h < g.hom(b, a).size(); ++h) {
        if (value_sizes[a] > 0 && value_sizes[b] == 0) impossible = true;
        for (std::size_t m = 0; m < value_sizes[a]; ++m) {
          slots.push_back({b, a, h, m});
          radices.push_back(value_sizes[b]);
        }
      }
  if (impossible) return;
  for_each_tuple(radices, budget, [&](const std::vector<std::size_t>& digits) {
    std::vector<std::vector<std::vector<std::size_t>>> actions(n * n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a)
        actions[b * n + a].assign(g.hom(b, a).size(),
                                  std::vector<std::size_t>(value_sizes[a]));
    for (std::size_t s = 0; s < slots.size(); ++s)
      actions[slots[s].b * n + slots[s].a][slots[s].edge][slots[s].point] =
          digits[s];
    return fn(Character(X.graph, values, std::move(actions)));
  });
}

}  // namespace fincat
