#include <iostream>
#include <map>
#include <memory>

#include "CLI11.hpp"
#include "fgt/cli.hpp"
#include "fgt/limits.hpp"

int main(int argc, char** argv) {
  using namespace fgt::cli;
  CLI::App app{"fgt: finite groups, fields, codes, lattices and moonshine"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  struct Bound {
    CLI::App* sub;
    std::map<std::string, std::unique_ptr<std::string>> values;
    std::map<std::string, CLI::Option*> options;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& spec : command_specs()) {
    auto b = std::make_unique<Bound>();
    b->sub = app.add_subcommand(spec.name, spec.help);
    for (const auto& p : spec.params) {
      if (p.is_flag) {
        b->options[p.name] = b->sub->add_flag("--" + p.name, p.help);
      } else {
        auto& slot = b->values[p.name] = std::make_unique<std::string>();
        b->options[p.name] = b->sub->add_option("--" + p.name, *slot, p.help);
      }
    }
    bound.push_back(std::move(b));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CommandRequest request;
  request.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
  for (const auto& b : bound) {
    if (!b->sub->parsed()) continue;
    request.subcommand = b->sub->get_name();
    for (const auto& [name, opt] : b->options) {
      if (opt->count() == 0) continue;
      auto v = b->values.find(name);
      request.params[name] = v == b->values.end() ? "true" : *v->second;
    }
  }

  try {
    fgt::set_limits(fgt::Limits::from_environment());
  } catch (const std::exception& e) {
    std::cerr << "error (configuration): " << e.what() << "\n";
    return exit_code_for(e);
  }
  return dispatch(request, std::cout, std::cerr);
}
