#ifndef NAIL_AGENT_MODULE_HPP_
#define NAIL_AGENT_MODULE_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nail/agent/action_iterator.hpp"
#include "nail/agent/context.hpp"

namespace nail::agent {

// Eagerness constants, in one place so run configurations can override them.
struct EagernessTable {
  double restart = 0.99;
  double yes_no = 0.99;
  double darkness = 0.99;
  double you_have_to = 0.97;
  double hoarder = 0.95;
  double examiner = 0.90;
  double interactor = 0.85;  // scaled by 1/(1+k) after k actions from a list
  double navigator = 0.10;
  double idler = 0.01;
  double look_only = 0.001;
};

class DecisionModule {
 public:
  explicit DecisionModule(std::string name) : name_(std::move(name)) {}
  virtual ~DecisionModule() = default;

  const std::string& name() const { return name_; }
  int registration_index() const { return registration_index_; }
  void set_registration_index(int i) { registration_index_ = i; }

  // In [0,1); 0 means the module has nothing to do. Must not change state.
  virtual double eagerness(const AgentContext& ctx) const = 0;
  virtual ActionIterator take_control(AgentContext& ctx) = 0;
  // Most actions a single grant may emit.
  virtual int max_actions_per_grant() const { return 1; }
  // Whether valid responses to this module's actions are narrative worth
  // mining for entities.
  virtual bool feeds_narrative() const { return true; }

 private:
  std::string name_;
  int registration_index_ = 0;
};

class UnknownModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Names: Restart, YesNo, Darkness, YouHaveTo, Hoarder, Examiner, Interactor,
// Navigator, Idler, LookOnly.
std::unique_ptr<DecisionModule> make_module(std::string_view name, const EagernessTable& table);
const std::vector<std::string>& all_module_names();
// The full agent in registration order.
const std::vector<std::string>& default_module_names();

}  // namespace nail::agent

#endif  // NAIL_AGENT_MODULE_HPP_
