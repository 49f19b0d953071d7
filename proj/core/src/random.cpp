#include "eulerstrat/random.hpp"

#include <string>

namespace eulerstrat {

Int draw(Rng& rng, Int lo, Int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Int>(rng() % span);
}

bool coin(Rng& rng, int percent) { return draw(rng, 0, 99) < percent; }

namespace {

std::string stratum_name(std::size_t i) {
  auto digits = std::to_string(i);
  return "s" + std::string(digits.size() < 2 ? 2 - digits.size() : 0, '0') + digits;
}

}  // namespace

PosetSpec random_poset_spec(Rng& rng, const RandomPosetOptions& options) {
  const auto n = static_cast<std::size_t>(draw(rng, 1, static_cast<Int>(options.max_strata)));
  PosetSpec spec;
  auto chi = [&] { return draw(rng, -options.chi_range, options.chi_range); };
  for (std::size_t i = 0; i < n; ++i) spec.strata.push_back({stratum_name(i), 0, 0});

  auto add_random_pairs = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        if (spec.strata[i].complex_dim < spec.strata[j].complex_dim && coin(rng, 40))
          spec.pairs.push_back({spec.strata[i].id, spec.strata[j].id});
  };

  if (options.force_dense) {
    const auto lower = n - 1;
    for (std::size_t i = 0; i < lower; ++i) spec.strata[i].complex_dim = draw(rng, 0, 3);
    spec.strata[lower].complex_dim = lower == 0 ? draw(rng, 0, 4) : 4;
    add_random_pairs(lower);
    for (std::size_t i = 0; i < lower; ++i) spec.pairs.push_back({spec.strata[i].id, spec.strata[lower].id});
  } else if (options.pure_dimensional) {
    const auto maximal = static_cast<std::size_t>(draw(rng, 1, static_cast<Int>(std::min<std::size_t>(3, n))));
    const auto lower = n - maximal;
    const Int top_dim = lower == 0 ? draw(rng, 0, 4) : draw(rng, 1, 4);
    for (std::size_t i = 0; i < lower; ++i) spec.strata[i].complex_dim = draw(rng, 0, top_dim - 1);
    for (std::size_t i = lower; i < n; ++i) spec.strata[i].complex_dim = top_dim;
    add_random_pairs(n);
    for (std::size_t i = 0; i < lower; ++i) {
      auto m = lower + static_cast<std::size_t>(draw(rng, 0, static_cast<Int>(maximal) - 1));
      spec.pairs.push_back({spec.strata[i].id, spec.strata[m].id});
    }
  } else {
    for (auto& s : spec.strata) s.complex_dim = draw(rng, 0, 4);
    add_random_pairs(n);
  }
  for (auto& s : spec.strata) s.chi_c = chi();
  return spec;
}

PosetPtr random_poset(Rng& rng, const RandomPosetOptions& options) {
  auto spec = random_poset_spec(rng, options);
  return build_poset(spec.strata, spec.pairs);
}

std::vector<LinkEntry> random_link_entries(Rng& rng, const PosetPtr& space, Int range) {
  std::vector<LinkEntry> out;
  for (const auto& rel : space->relations()) {
    const auto codim = space->complex_dim(space->index_of(rel.upper)) - space->complex_dim(space->index_of(rel.lower));
    LinkEntry e{rel.lower, rel.upper, std::nullopt, std::nullopt};
    const auto mode = draw(rng, 0, 2);
    if (mode == 0) {
      e.ichi_cone = draw(rng, -range, range);
    } else {
      std::vector<Int> betti(static_cast<std::size_t>(draw(rng, 0, 2 * codim)));
      for (auto& b : betti) b = draw(rng, 0, range);
      if (mode == 2) e.ichi_cone = cone_euler(betti, codim);
      e.link_ih_betti = std::move(betti);
    }
    out.push_back(std::move(e));
  }
  return out;
}

LinkSystem random_links(Rng& rng, const PosetPtr& space, Int range) {
  return LinkSystem(space, random_link_entries(rng, space, range));
}

ConstrFn random_function(Rng& rng, const PosetPtr& space, Int range) {
  std::vector<Int> values(space->size());
  for (auto& v : values) v = draw(rng, -range, range);
  return {space, std::move(values)};
}

TriangularMatrix random_unipotent(Rng& rng, const PosetPtr& space, Int range) {
  const auto n = space->size();
  std::vector<Int> entries(n * n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = 0; v < n; ++v)
      if (w == v)
        entries[w * n + v] = 1;
      else if (space->less(w, v))
        entries[w * n + v] = draw(rng, -range, range);
  return {space, std::move(entries)};
}

MapInstance random_map(Rng& rng, std::size_t max_strata) {
  auto target = random_poset(rng, {max_strata, true, true, 4});
  auto source_spec = random_poset_spec(rng, {max_strata, false, true, 4});

  const auto nt = target->size();
  const auto ns = source_spec.strata.size();
  // The source spec is in insertion order; build the poset after fixing chi_c
  // and map kernel columns by id.
  std::vector<std::vector<Int>> columns(ns, std::vector<Int>(nt, 0));
  for (std::size_t u = 0; u < ns; ++u) {
    Int chi = 0;
    for (std::size_t v = 0; v < nt; ++v) {
      if (coin(rng, 50)) columns[u][v] = draw(rng, -2, 3);
      chi = checked_fma(chi, target->chi_c(v), columns[u][v]);
    }
    source_spec.strata[u].chi_c = chi;
  }
  auto source = build_poset(source_spec.strata, source_spec.pairs);

  std::vector<Int> entries(nt * ns, 0);
  for (std::size_t u = 0; u < ns; ++u) {
    auto su = source->index_of(source_spec.strata[u].id);
    for (std::size_t v = 0; v < nt; ++v) entries[v * ns + su] = columns[u][v];
  }
  auto source_links = random_links(rng, source);
  auto target_links = random_links(rng, target);
  ProperMapKernel kernel(source, target, std::move(entries));
  return {{source, std::move(source_links)}, {target, std::move(target_links)}, std::move(kernel)};
}

}  // namespace eulerstrat
