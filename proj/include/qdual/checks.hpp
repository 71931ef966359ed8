#ifndef QDUAL_CHECKS_HPP
#define QDUAL_CHECKS_HPP

#include <string>
#include <vector>

#include "qdual/verify.hpp"

namespace qdual {

/// Options shared by all registered checks.
struct CheckContext {
    unsigned long seed = 20240801;
    bool pair_sign_flip = false;  // negative control: flip pair sign modes
};

/// Names of all registered checks, in registration order.
std::vector<std::string> check_names();

/// Run one registered check.  Throws DomainError for unknown names.
CheckReport run_check(const std::string& name, const CheckContext& ctx);

/// Run several checks (all when names is empty), in registration order.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names,
                                    const CheckContext& ctx);

}  // namespace qdual

#endif
