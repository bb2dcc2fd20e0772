#include "rubikred/cli.hpp"

#include <ostream>

#include "CLI11.hpp"

#include "rubikred/acceptance.hpp"
#include "rubikred/coloring.hpp"
#include "rubikred/errors.hpp"
#include "rubikred/json_io.hpp"
#include "rubikred/solver.hpp"

namespace rubikred {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string target = "square";
  std::string certificate;
  std::string sequence;
  std::string moves;
  std::string format = "ascii";
  std::string face = "all";
  std::string strategy = "bi";
  std::string predict;
  std::string kind;
  std::string metric;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  int max_depth = -1;
  std::uint64_t node_limit = SearchBudget{}.node_limit;
  int side = 0;
  int criterion = 0;
  bool group = false;
  bool search = false;
  bool no_prune = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int reduce_cmd() {
    const CubicalInstance inst = load_cubical(true);
    const ReducedInstance ri = reduce(inst, problem_kind_from_string(opt_.target), opt_.group);
    emit(reduced_to_json(ri).dump(2) + "\n");
    return kExitOk;
  }

  int certify_cmd() {
    const CubicalInstance inst = load_cubical(false);
    PathCertificate cert;
    if (!opt_.certificate.empty()) {
      cert = certificate_from_json(parse_json(read_text_file(opt_.certificate)));
      try {
        validate_certificate(inst, cert);
      } catch (const InvalidArgument& e) {
        throw SchemaError(std::string("invalid certificate: ") + e.what());
      }
    } else if (opt_.search) {
      const auto path = find_ham_path(inst);
      if (!path) {
        err_ << "no path: the labels admit no Hamiltonian path\n";
        return kExitNo;
      }
      cert.ordering = *path;
    } else {
      throw InvalidArgument("certify needs --certificate FILE or --search");
    }
    const ProblemKind kind = problem_kind_from_string(opt_.target);
    const MoveSequence seq = kind == ProblemKind::Square
                                 ? synthesize_square_solution(inst, cert)
                                 : synthesize_cube_solution(inst, cert, problem_metric(kind));
    const Verdict verdict = verify_solution(reduce(inst, kind, opt_.group), seq);
    emit(format_sequence(seq) + "\n");
    if (!verdict.accepted) {
      err_ << "synthesized sequence rejected:" << reasons(verdict) << "\n";
      return kExitNo;
    }
    return kExitOk;
  }

  int solve_cmd() {
    const Json doc = parse_json(read_text_file(require_input()));
    SearchBudget budget;
    budget.node_limit = opt_.node_limit;
    budget.strategy = opt_.strategy == "uni" ? Strategy::Unidirectional : Strategy::Bidirectional;
    budget.prune = !opt_.no_prune;
    budget.max_depth = opt_.max_depth;
    SearchResult result;
    switch (detect_document(doc)) {
      case DocumentType::Reduced: {
        const ReducedInstance ri = reduced_from_json(doc);
        if (budget.max_depth < 0) budget.max_depth = ri.budget;
        result = ri.group ? solve_optimal(*ri.transformation, ri.metric(), budget)
                          : solve_optimal(*ri.configuration, ri.metric(), budget);
        break;
      }
      case DocumentType::Config: {
        const PuzzleConfig config = config_from_json(doc);
        result = solve_optimal(config, metric_for(config.puzzle().kind()), depth_required(budget));
        break;
      }
      case DocumentType::Permutation: {
        const StickerPermutation perm = permutation_from_json(doc);
        result = solve_optimal(perm, metric_for(perm.puzzle().kind()), depth_required(budget));
        break;
      }
      default:
        throw SchemaError("solve expects a reduced instance, configuration or transformation");
    }
    switch (result.status) {
      case SearchStatus::Solved:
        emit(format_sequence(result.moves) + "\n");
        err_ << "solved in " << result.moves.size() << " moves (" << result.nodes << " nodes)\n";
        return kExitOk;
      case SearchStatus::NoSolution:
        err_ << "no: no solution within " << budget.max_depth << " moves (" << result.nodes
             << " nodes)\n";
        return kExitNo;
      case SearchStatus::CapacityExceeded:
        err_ << "capacity exceeded after " << result.nodes << " nodes\n";
        return kExitCapacity;
    }
    return kExitCapacity;
  }

  int verify_cmd() {
    const ReducedInstance ri = reduced_from_json(parse_json(read_text_file(require_input())));
    std::string text = opt_.moves;
    if (!opt_.sequence.empty()) text = read_text_file(opt_.sequence);
    else if (opt_.moves.empty()) throw InvalidArgument("verify needs --sequence FILE or --moves TEXT");
    const MoveSequence seq = parse_sequence(text, puzzle_kind(ri.kind), ri.side);
    const Verdict verdict = verify_solution(ri, seq);
    if (verdict.accepted) {
      emit("accepted " + std::to_string(verdict.length) + " moves\n");
      return kExitOk;
    }
    emit("rejected" + reasons(verdict) + "\n");
    return kExitNo;
  }

  int render_cmd() {
    const RenderFormat format = render_format_from_string(opt_.format);
    const std::optional<Face> face =
        opt_.face == "all" ? std::nullopt : std::optional<Face>(face_from_string(opt_.face));
    std::string text;
    if (opt_.input.empty()) {
      if (opt_.kind.empty() || opt_.side < 2) {
        throw InvalidArgument("render needs --input FILE, or --kind and --side for a solved puzzle");
      }
      text = render(make_solved(kind_from_string(opt_.kind), opt_.side), format, face);
    } else {
      const Json doc = parse_json(read_text_file(opt_.input));
      switch (detect_document(doc)) {
        case DocumentType::Config:
          text = render(config_from_json(doc), format, face);
          break;
        case DocumentType::Reduced: {
          const ReducedInstance ri = reduced_from_json(doc);
          const PuzzleConfig config =
              ri.group ? apply_permutation(*ri.transformation, make_solved(puzzle_kind(ri.kind), ri.side))
                       : *ri.configuration;
          text = render(config, format, face);
          break;
        }
        case DocumentType::Cubical: {
          const CubicalInstance inst = cubical_from_json(doc);
          const Kind kind = puzzle_kind(problem_kind_from_string(opt_.target));
          PredictedColoring pc;
          if (opt_.predict == "cb") {
            pc = kind == Kind::Square ? predict_square_cb(inst) : predict_cube_cb(inst);
          } else if (opt_.predict == "ct") {
            pc = predict_ct(inst, kind);
          } else {
            throw InvalidArgument("rendering a cubical instance needs --predict cb|ct");
          }
          text = render(pc, format, face);
          break;
        }
        default:
          throw SchemaError("render expects a configuration, reduced instance or cubical instance");
      }
    }
    if (format == RenderFormat::Ascii) text += "\n";
    emit(text);
    return kExitOk;
  }

  int selftest_cmd() {
    AcceptanceOptions options;
    options.seed = opt_.seed;
    if (opt_.criterion != 0) options.only = opt_.criterion;
    bool all = true;
    for (int id = 1; id <= kCriterionCount; ++id) {
      if (options.only && *options.only != id) continue;
      const CriterionResult r = run_criterion(id, options.seed);
      out_ << format_result(r) << std::endl;
      all = all && r.passed;
    }
    return all ? kExitOk : kExitNo;
  }

 private:
  const std::string& require_input() const {
    if (opt_.input.empty()) throw InvalidArgument("--input is required");
    return opt_.input;
  }

  void emit(const std::string& text) {
    if (opt_.output.empty()) out_ << text;
    else write_text_file(opt_.output, text);
  }

  static std::string reasons(const Verdict& v) {
    std::string s;
    for (VerdictReason r : v.reasons) s += " " + std::string(to_string(r));
    return s;
  }

  Metric metric_for(Kind kind) const {
    if (opt_.metric.empty()) return kind == Kind::Square ? Metric::SquareFlip : Metric::Stm;
    if (opt_.metric == "flip") return Metric::SquareFlip;
    if (opt_.metric == "stm") return Metric::Stm;
    if (opt_.metric == "sqtm") return Metric::Sqtm;
    throw InvalidArgument("unknown metric '" + opt_.metric + "'");
  }

  static SearchBudget depth_required(SearchBudget budget) {
    if (budget.max_depth < 0) throw InvalidArgument("--max-depth is required for this input");
    return budget;
  }

  // Grid graphs go through the cycle gadget, promise grids straight to the
  // labelling; the promise is checked when the instance is small enough.
  CubicalInstance load_cubical(bool check_promise) const {
    const Json doc = parse_json(read_text_file(require_input()));
    CubicalInstance inst;
    switch (detect_document(doc)) {
      case DocumentType::GridGraph: {
        PromiseGridInstance promise;
        try {
          promise = cycle_to_path(grid_from_json(doc));
        } catch (const InvalidArgument& e) {
          throw PromiseViolation(e.what());
        }
        inst = grid_to_cubical(promise);
        break;
      }
      case DocumentType::PromiseGrid:
        inst = grid_to_cubical(promise_from_json(doc));
        break;
      case DocumentType::Cubical:
        inst = cubical_from_json(doc);
        break;
      default:
        throw SchemaError("expected a grid graph, promise grid instance or cubical instance");
    }
    const ValidationReport report =
        validate_promise(inst, check_promise && inst.n() <= kMaxDpVertices);
    if (!report.ok()) {
      std::string msg = "promise violated:";
      for (const auto& p : report.problems) msg += " " + p + ";";
      throw PromiseViolation(msg);
    }
    return inst;
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reductions from grid-graph Hamiltonicity to optimal Rubik's Square/Cube solving"};
  app.name("rubikred");
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  app.add_option("--input", opt.input, "Input JSON file");
  app.add_option("--output", opt.output, "Write the result here instead of standard output");
  app.add_option("--seed", opt.seed, "Seed for randomized suites");
  app.add_option("--max-depth", opt.max_depth, "Search depth (defaults to k for reduced instances)");
  app.add_option("--node-limit", opt.node_limit, "Search node limit")->check(CLI::PositiveNumber);
  app.add_option("--strategy", opt.strategy, "uni or bi")->check(CLI::IsMember({"uni", "bi"}));
  app.add_flag("--no-prune", opt.no_prune, "Disable canonical move pruning");
  app.add_option("--target", opt.target, "square, cube-stm or cube-sqtm")
      ->check(CLI::IsMember({"square", "cube-stm", "cube-sqtm", "cube_stm", "cube_sqtm"}));
  app.add_flag("--group", opt.group, "Emit the group variant");
  app.add_option("--certificate", opt.certificate, "Certificate JSON file");
  app.add_flag("--search", opt.search, "Find a Hamiltonian path instead of reading a certificate");
  app.add_option("--sequence", opt.sequence, "Sequence file");
  app.add_option("--moves", opt.moves, "Move tokens");
  app.add_option("--metric", opt.metric, "flip, stm or sqtm (configuration/transformation input)");
  app.add_option("--format", opt.format, "ascii or svg");
  app.add_option("--face", opt.face, "+x, -x, +y, -y, +z, -z or all");
  app.add_option("--predict", opt.predict, "cb or ct (cubical input)");
  app.add_option("--kind", opt.kind, "square or cube (render a solved puzzle)");
  app.add_option("--side", opt.side, "Side length (render a solved puzzle)");
  app.add_option("--criterion", opt.criterion, "Run a single acceptance criterion");

  auto* reduce_cmd = app.add_subcommand("reduce", "Emit a reduced Square/Cube instance");
  auto* certify_cmd = app.add_subcommand("certify", "Synthesize a (2n-1)-move solution");
  auto* solve_cmd = app.add_subcommand("solve", "Exhaustive optimal search");
  auto* verify_cmd = app.add_subcommand("verify", "Check a move sequence against an instance");
  auto* render_cmd = app.add_subcommand("render", "Draw a configuration or predicted colouring");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner runner(opt, out, err);
  try {
    if (*reduce_cmd) return runner.reduce_cmd();
    if (*certify_cmd) return runner.certify_cmd();
    if (*solve_cmd) return runner.solve_cmd();
    if (*verify_cmd) return runner.verify_cmd();
    if (*render_cmd) return runner.render_cmd();
    if (*selftest_cmd) return runner.selftest_cmd();
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const PromiseViolation& e) {
    err << "promise violation: " << e.what() << "\n";
    return kExitSchema;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rubikred
