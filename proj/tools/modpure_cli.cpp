// Batch front end: load ring/module descriptions, run classifications and
// purity checks, verify the theorem suite, and emit text or JSON reports.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "modpure/commands.hpp"

namespace {

struct GlobalArgs {
  std::string input;
  std::string format = "text";
  int jobs = 1;
  modpure::Caps caps;
  modpure::ZooScope scope = modpure::ZooScope::default_scope();
  std::string rings;
};

modpure::CmdOptions make_options(const GlobalArgs& args) {
  modpure::CmdOptions opt;
  opt.format = args.format;
  opt.caps = args.caps;
  opt.scope = args.scope;
  opt.scope.caps = args.caps;
  opt.jobs = args.jobs;
  if (!args.rings.empty()) {
    opt.scope.rings.clear();
    std::size_t start = 0;
    while (start <= args.rings.size()) {
      std::size_t comma = args.rings.find(',', start);
      std::string part = args.rings.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!part.empty()) opt.scope.rings.push_back(modpure::RingSpec::parse(part));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return opt;
}

modpure::InputDocument load_doc(const GlobalArgs& args) {
  if (args.input.empty()) {
    throw modpure::InputError("this command needs --input <file>");
  }
  return modpure::load_input_file(args.input, args.caps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for purity and injectivity properties of finite modules"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalArgs args;
  app.add_option("--input", args.input, "input document (JSON)");
  app.add_option("--format", args.format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", args.jobs, "worker threads for theorem checks")->check(CLI::PositiveNumber);
  app.add_option("--module-order-cap", args.scope.module_order_cap, "zoo module order cap");
  app.add_option("--free-rank-cap", args.scope.free_rank_cap, "free module rank cap");
  app.add_option("--chain-depth", args.scope.chain_depth, "submodule chain depth");
  app.add_option("--copies", args.scope.copies, "direct sum copies for the sum check");
  app.add_option("--max-ring-order", args.caps.max_ring_order, "ring order cap");
  app.add_option("--max-module-order", args.caps.max_module_order, "module order cap");
  app.add_option("--max-generators", args.caps.max_generators, "ideal/module generator cap");
  app.add_option("--max-direct-sum-order", args.caps.max_direct_sum_order, "direct sum order cap");

  auto* classify = app.add_subcommand("classify", "classify a module's injectivity/purity flags");
  std::string classify_module;
  classify->add_option("--module", classify_module, "module name (default: classify tasks)");

  auto* check = app.add_subcommand("check", "check self-pure / M-pure / pure for a pair");
  std::string check_property = "self-pure";
  std::string check_sub, check_in, check_rel;
  check->add_option("--property", check_property, "self-pure, M-pure or pure")
      ->check(CLI::IsMember({"self-pure", "M-pure", "pure"}));
  check->add_option("--sub", check_sub, "submodule name");
  check->add_option("--in", check_in, "parent module name");
  check->add_option("--relative-to", check_rel, "module for M-pure");

  auto* verify = app.add_subcommand("verify-theorems", "run the exhaustive theorem suite");
  verify->add_option("--rings", args.rings, "comma list of rings (integers, Z_n, Z_nxZ_m)");

  auto* zoo = app.add_subcommand("zoo", "zoo inspection");
  auto* zoo_list = zoo->add_subcommand("list", "list the ring catalog or a module zoo");
  std::string zoo_ring;
  int zoo_catalog_max = 8;
  zoo_list->add_option("--ring", zoo_ring, "ring whose module zoo to list");
  zoo_list->add_option("--catalog-max", zoo_catalog_max, "max order for the ring catalog");

  auto* validate_cmd = app.add_subcommand("validate", "validate every structure in the input");

  CLI11_PARSE(app, argc, argv);

  try {
    modpure::CmdOptions opt = make_options(args);
    if (*classify) {
      return modpure::cmd_classify(load_doc(args), classify_module, opt, std::cout);
    }
    if (*check) {
      return modpure::cmd_check(load_doc(args), check_property, check_sub, check_in, check_rel,
                                opt, std::cout);
    }
    if (*verify) {
      if (!args.input.empty()) {
        // Structures must validate before any theorem runs.
        modpure::InputDocument doc = load_doc(args);
        bool ok = true;
        for (const auto& [name, rep] : modpure::validate_document(doc)) ok = ok && rep.ok();
        if (!ok) return modpure::cmd_validate(doc, opt, std::cout);
      }
      return modpure::cmd_verify_theorems(opt, std::cout);
    }
    if (*zoo) {
      if (!*zoo_list) {
        std::cerr << "zoo needs a subcommand (list)\n";
        return 1;
      }
      return modpure::cmd_zoo_list(zoo_ring, zoo_catalog_max, opt, std::cout);
    }
    if (*validate_cmd) {
      return modpure::cmd_validate(load_doc(args), opt, std::cout);
    }
  } catch (const modpure::CapacityError& e) {
    std::cerr << "capacity overflow: " << e.what() << "\n";
    return modpure::kExitCapacity;
  } catch (const modpure::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return modpure::kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return modpure::kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
