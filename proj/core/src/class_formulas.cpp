#include "eulerstrat/class_formulas.hpp"

namespace eulerstrat {

FormulaReport verify_class_formula(const ProperMapKernel& kernel, const ConstrFn& alpha, const LinkSystem& target_links,
                                   Formula which) {
  const auto& target = kernel.target();
  switch (which) {
    case Formula::eq5:
    case Formula::eq7:
      return verify_hat_class(kernel, alpha, universal_closed_hom(target), which);
    case Formula::eq14:
    case Formula::eq16:
    case Formula::eq18:
      return verify_ic_class(kernel, alpha, target_links, universal_ic_hom(target), which);
    case Formula::c2: {
      const auto& space = target_links.space();
      return verify_ic_class(ProperMapKernel::identity(space), constant(space, 1), target_links,
                             universal_ic_hom(space), Formula::c2);
    }
    default:
      break;
  }
  throw InputError("'" + std::string(to_string(which)) + "' is not a class-level formula");
}

}  // namespace eulerstrat
