#ifndef NAIL_ENGINE_INTERNAL_HPP_
#define NAIL_ENGINE_INTERNAL_HPP_

#include <string>
#include <vector>

namespace nail::engine::detail {

// Words every game understands regardless of its objects.
const std::vector<std::string>& builtin_vocabulary();

// Multi-word and single-word verb phrases handled by the engine itself.
const std::vector<std::string>& builtin_verbs();

}  // namespace nail::engine::detail

#endif  // NAIL_ENGINE_INTERNAL_HPP_
