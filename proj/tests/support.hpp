#ifndef NAIL_TESTS_SUPPORT_HPP_
#define NAIL_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <memory>
#include <string>

#include "nail/harness.hpp"

namespace nail::testing {

inline std::string data_path(const std::string& rel) {
  return (std::filesystem::path(NAIL_DATA_DIR) / rel).string();
}

// Models trained once per process from the bundled corpora.
inline const harness::ResourceBundle& bundle() {
  static const harness::ResourceBundle b = harness::load_resources({NAIL_DATA_DIR, "", ""});
  return b;
}

inline agent::Resources resources() { return bundle().view(); }

inline std::shared_ptr<const engine::GameSpec> game(const std::string& id) {
  return std::make_shared<const engine::GameSpec>(engine::load_game_file(data_path("games/" + id + ".game")));
}

}  // namespace nail::testing

#endif  // NAIL_TESTS_SUPPORT_HPP_
