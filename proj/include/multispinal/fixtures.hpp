#pragma once

#include <string>
#include <vector>

#include "multispinal/instance.hpp"

namespace multispinal {

// The bundled instances, embedded at build time from fixtures/*.json so the
// CLI selftest needs no files at run time. "gupta-variant" is accepted as an
// alias for "nonsimple-variant".
std::vector<std::string> fixture_names();
const std::string& fixture_json(const std::string& name);  // Error("UnknownFixture")
MultispinalInstance fixture_instance(const std::string& name);

}  // namespace multispinal
