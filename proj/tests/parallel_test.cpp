#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hw/parallel.hpp"

using namespace hw;

TEST_CASE("parallel_for fills every slot") {
  setenv("HW_THREADS", "4", 1);
  std::vector<int> out(1000, -1);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i * i % 97); });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i % 97));
  parallel_for(0, [](std::size_t) { throw std::logic_error("never"); });
  unsetenv("HW_THREADS");
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  setenv("HW_THREADS", "4", 1);
  try {
    parallel_for(50, [](std::size_t i) {
      if (i == 31 || i == 7) throw std::runtime_error("cell " + std::to_string(i));
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "cell 7");
  }
  unsetenv("HW_THREADS");
}
