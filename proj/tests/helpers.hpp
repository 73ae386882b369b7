#pragma once

#include <functional>
#include <string>

#include "multispinal/errors.hpp"

namespace test_util {

// Kind of the Error a callable throws, or "(no error)".
inline std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const multispinal::Error& e) {
    return e.kind();
  }
  return "(no error)";
}

inline bool throws_defect(const std::function<void()>& f) {
  try {
    f();
  } catch (const multispinal::Defect&) {
    return true;
  } catch (const multispinal::Error&) {
    return false;
  }
  return false;
}

}  // namespace test_util
