#pragma once

// shared test utilities: locating the bundled fixture files and loading them

#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>
#include <utility>

#include "wcx/io.hpp"

namespace testutil {

inline std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("WCX_FIXTURES")) return env;
  return "fixtures";
}

inline std::filesystem::path fixture_path(const std::string& name) {
  return fixture_dir() / name;
}

inline wcx::WiredDocument load_fixture_wired(const std::string& name) {
  return wcx::load_wired(fixture_path(name));
}

// A complex together with the document that owns its arrangement: the complex
// points into the document, so the two must travel as a unit. The shared_ptr
// keeps the arrangement at a stable address across moves of the holder.
struct FixtureComplex {
  std::shared_ptr<wcx::WiredDocument> doc;
  wcx::PartialWiredComplex complex;
};

inline FixtureComplex fixture_complex(const std::string& name) {
  auto doc = std::make_shared<wcx::WiredDocument>(load_fixture_wired(name));
  wcx::PartialWiredComplex complex = wcx::build_complex(*doc);
  return {std::move(doc), std::move(complex)};
}

inline std::string two_digit(int i) {
  return (i < 10 ? "0" : "") + std::to_string(i);
}

}  // namespace testutil
