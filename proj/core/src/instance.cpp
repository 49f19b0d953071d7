#include "eulerstrat/instance.hpp"

namespace eulerstrat {

MapInstance MapInstance::identity(const SpaceInstance& space) {
  return {space, space, ProperMapKernel::identity(space.poset)};
}

bool accepts_function(Formula f) {
  switch (f) {
    case Formula::eq3:
    case Formula::eq4:
    case Formula::eq5:
    case Formula::eq11:
    case Formula::eq12:
    case Formula::eq13:
    case Formula::eq14:
      return true;
    default:
      return false;
  }
}

FormulaReport run_formula(const MapInstance& map, Formula f, const std::optional<ConstrFn>& alpha) {
  if (alpha && !accepts_function(f))
    throw InputError("formula " + std::string(to_string(f)) + " fixes its own function; --function is not allowed");
  const auto& source = map.source.poset;
  const auto& target_links = map.target.links;

  auto given_or = [&](const PosetPtr& space) {
    if (!alpha) return constant(space, 1);
    if (!same_space(alpha->space(), space)) throw SpaceMismatchError("function is not defined on the expected space");
    return *alpha;
  };
  auto ic_source = [&] { return ic_space(map.source.links); };

  switch (f) {
    case Formula::eq3: return decompose_pushforward_hat(map.kernel, given_or(source));
    case Formula::eq4: return verify_chi_mult(map.kernel, given_or(source), Formula::eq4);
    case Formula::eq5: return verify_class_formula(map.kernel, given_or(source), target_links, Formula::eq5);
    case Formula::eq6: return verify_chi_mult(map.kernel, constant(source, 1), Formula::eq6);
    case Formula::eq7: return verify_class_formula(map.kernel, constant(source, 1), target_links, Formula::eq7);
    case Formula::eq11: return verify_decompose_ic(target_links, given_or(map.target.poset));
    case Formula::eq12: return verify_ic_pushforward(map.kernel, given_or(source), target_links, Formula::eq12);
    case Formula::eq13: return verify_ichi_mult(map.kernel, given_or(source), target_links, Formula::eq13);
    case Formula::eq14: return verify_class_formula(map.kernel, given_or(source), target_links, Formula::eq14);
    case Formula::eq15: return verify_ichi_mult(map.kernel, constant(source, 1), target_links, Formula::eq15);
    case Formula::eq16: return verify_class_formula(map.kernel, constant(source, 1), target_links, Formula::eq16);
    case Formula::eq17: return verify_ichi_mult(map.kernel, ic_source(), target_links, Formula::eq17);
    case Formula::eq18: return verify_class_formula(map.kernel, ic_source(), target_links, Formula::eq18);
    case Formula::c1: return verify_compare(target_links);
    case Formula::c2: return verify_class_formula(map.kernel, constant(source, 1), target_links, Formula::c2);
  }
  throw InputError("unknown formula");
}

}  // namespace eulerstrat
