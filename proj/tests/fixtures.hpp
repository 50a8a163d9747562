#pragma once

#include <string>

#include "dgq/io.hpp"

inline dgq::DgQuiver fixture(const std::string& name) {
  return dgq::load_quiver(std::string(DGQ_FIXTURE_DIR) + "/" + name + ".dgq");
}
