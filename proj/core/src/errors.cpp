#include "rtoda/errors.hpp"

namespace rtoda {

bool is_config_error(const Error& e) { return e.kind() == "ConfigError"; }

}  // namespace rtoda
