#include "eulerstrat/hom.hpp"

namespace eulerstrat {

HomSpec<Int> chi_hom(const PosetPtr& space) {
  HomSpec<Int> phi{space, Basis::closed_indicator, {}};
  for (std::size_t v = 0; v < space->size(); ++v) phi.values.push_back(closure_euler(*space, v));
  return phi;
}

HomSpec<Int> ichi_hom(const LinkSystem& links) {
  const auto& space = links.space();
  HomSpec<Int> phi{space, Basis::ic, {}};
  for (std::size_t v = 0; v < space->size(); ++v) phi.values.push_back(euler(ic_function(links, v)));
  return phi;
}

HomSpec<ChernClass> universal_closed_hom(const PosetPtr& space) {
  HomSpec<ChernClass> phi{space, Basis::closed_indicator, {}};
  for (std::size_t v = 0; v < space->size(); ++v) phi.values.push_back(ChernClass::symbol(space, v));
  return phi;
}

HomSpec<IcChernClass> universal_ic_hom(const PosetPtr& space) {
  HomSpec<IcChernClass> phi{space, Basis::ic, {}};
  for (std::size_t v = 0; v < space->size(); ++v) phi.values.push_back(IcChernClass::symbol(space, v));
  return phi;
}

}  // namespace eulerstrat
