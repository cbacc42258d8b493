#ifndef NAIL_AGENT_ACTION_ITERATOR_HPP_
#define NAIL_AGENT_ACTION_ITERATOR_HPP_

#include <coroutine>
#include <exception>
#include <optional>
#include <string>
#include <utility>

#include "nail/engine.hpp"

namespace nail::agent {

// What a module learns about the action it just yielded.
struct Feedback {
  engine::Observation observation;
  double p_valid = 0.0;
};

// A module's turn in control, written as straight-line code:
//
//   ActionIterator Foo::take_control(AgentContext& ctx) {
//     Feedback fb = co_yield "look";
//     ...
//   }
//
// The loop pulls actions with next() and hands results back with send().
class ActionIterator {
 public:
  struct promise_type {
    std::string action;
    Feedback feedback;
    std::exception_ptr error;

    ActionIterator get_return_object() {
      return ActionIterator(std::coroutine_handle<promise_type>::from_promise(*this));
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    void return_void() noexcept {}
    void unhandled_exception() noexcept { error = std::current_exception(); }

    struct FeedbackAwaiter {
      promise_type* promise;
      bool await_ready() const noexcept { return false; }
      void await_suspend(std::coroutine_handle<promise_type>) const noexcept {}
      Feedback await_resume() const { return std::move(promise->feedback); }
    };
    FeedbackAwaiter yield_value(std::string a) {
      action = std::move(a);
      return FeedbackAwaiter{this};
    }
  };

  ActionIterator() = default;
  ActionIterator(ActionIterator&& other) noexcept : handle_(std::exchange(other.handle_, nullptr)) {}
  ActionIterator& operator=(ActionIterator&& other) noexcept {
    if (this != &other) {
      reset();
      handle_ = std::exchange(other.handle_, nullptr);
    }
    return *this;
  }
  ActionIterator(const ActionIterator&) = delete;
  ActionIterator& operator=(const ActionIterator&) = delete;
  ~ActionIterator() { reset(); }

  // Runs the module to its next action. Empty once the module is finished.
  std::optional<std::string> next() {
    if (!handle_ || handle_.done()) return std::nullopt;
    handle_.resume();
    if (handle_.promise().error) std::rethrow_exception(handle_.promise().error);
    if (handle_.done()) return std::nullopt;
    return handle_.promise().action;
  }

  // Result of the action most recently returned by next().
  void send(Feedback feedback) {
    if (handle_) handle_.promise().feedback = std::move(feedback);
  }

 private:
  explicit ActionIterator(std::coroutine_handle<promise_type> h) : handle_(h) {}
  void reset() {
    if (handle_) handle_.destroy();
    handle_ = nullptr;
  }

  std::coroutine_handle<promise_type> handle_;
};

}  // namespace nail::agent

#endif  // NAIL_AGENT_ACTION_ITERATOR_HPP_
