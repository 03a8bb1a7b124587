// Command-line front end: one subcommand per toolkit operation, JSON in and
// out. Exit codes: 0 success, 1 validation error, 2 oracle mismatch,
// 3 resource cap.
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidmono/errors.hpp"
#include "braidmono/fixtures.hpp"
#include "braidmono/json_io.hpp"
#include "braidmono/kummer.hpp"
#include "braidmono/singular.hpp"

namespace {

using namespace braidmono;

// All results funnel through here so identical values give identical bytes.
void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::fputs(dump_canonical(j).c_str(), stdout);
    else
        write_json_file(out_path, j);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::string spaced = text;
    for (char& c : spaced)
        if (c == ',')
            c = ' ';
    std::istringstream in(spaced);
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size())
            throw ValidationError(std::string(what) + ": \"" + token +
                                  "\" is not an integer");
        out.push_back(v);
    }
    return out;
}

LiftSystem system_from_name(const std::string& name) {
    if (name == "circular")
        return LiftSystem::circular;
    if (name == "radial")
        return LiftSystem::radial;
    if (name == "straight2")
        return LiftSystem::straight2;
    throw ValidationError("unknown lift system \"" + name +
                          "\" (expected circular, radial or straight2)");
}

struct LiftArgs {
    int n = 1;
    std::string system = "circular";
    bool forget = false;
    std::string in, out;
};

void run_lift(const LiftArgs& a) {
    const Factorization input = factorization_from_json(load_json_file(a.in));
    const LiftSpec spec(a.n, input.strands() - 1, system_from_name(a.system));
    emit(factorization_to_json(lift_factorization(spec, input, a.forget)), a.out);
}

struct HurwitzArgs {
    std::string moves;
    std::string in, out;
};

void run_hurwitz(const HurwitzArgs& a) {
    const Factorization input = factorization_from_json(load_json_file(a.in));
    const std::vector<int> moves = parse_int_list(a.moves, "--moves");
    emit(factorization_to_json(hurwitz_sequence(input, moves)), a.out);
}

struct ConjugateArgs {
    std::string by;
    std::string in, out;
};

void run_conjugate(const ConjugateArgs& a) {
    const Factorization input = factorization_from_json(load_json_file(a.in));
    const BraidWord g = braid_from_text(a.by, input.strands());
    emit(factorization_to_json(conjugate_all(input, g)), a.out);
}

struct GenerifyArgs {
    std::string rule;
    std::string data;
    std::string in, out;
};

void run_generify(const GenerifyArgs& a) {
    const Json sidecar = load_json_file(a.data);
    if (a.rule == "arrangement") {
        if (!a.in.empty())
            throw ValidationError(
                "--rule arrangement reads its whole input from --data; drop --in");
        emit(factorization_to_json(
                 arrangement_generify(arrangement_from_json(sidecar))),
             a.out);
        return;
    }
    if (a.in.empty())
        throw ValidationError("--in is required for --rule " + a.rule);
    const Factorization input = factorization_from_json(load_json_file(a.in));
    if (!sidecar.is_object() || !sidecar.contains("index") ||
        !sidecar["index"].is_number_integer())
        throw ValidationError("JSON input: sidecar needs an integer \"index\"");
    const int index = sidecar["index"].get<int>();
    if (a.rule == "local-split") {
        if (!sidecar.contains("parts") || !sidecar["parts"].is_array())
            throw ValidationError("JSON input: local-split needs a \"parts\" array");
        std::vector<BraidWord> parts;
        for (const Json& p : sidecar["parts"])
            parts.push_back(braid_from_json(p, input.strands()));
        std::vector<std::string> labels;
        if (sidecar.contains("labels"))
            for (const Json& l : sidecar["labels"]) {
                if (!l.is_string())
                    throw ValidationError("JSON input: part labels must be strings");
                labels.push_back(l.get<std::string>());
            }
        emit(factorization_to_json(
                 split_locally_generic(input, index, parts, labels)),
             a.out);
        return;
    }
    const TangencyModel model =
        tangency_model_from_json(a.rule, sidecar, input.strands());
    emit(factorization_to_json(replace_tangency(input, index, model)), a.out);
}

struct ZvkArgs {
    std::string variant;
    std::string in, out;
    std::string keep;
    std::string data;
    bool no_surjection = false;
};

void run_zvk(const ZvkArgs& a) {
    const Factorization input = factorization_from_json(load_json_file(a.in));
    GroupPresentation p;
    if (a.variant == "affine") {
        p = presentation_affine(input);
    } else if (a.variant == "horizontal") {
        const std::vector<int> kept = parse_int_list(a.keep, "--keep");
        p = presentation_fully_horizontal(input, kept);
    } else if (a.variant == "projective") {
        p = presentation_projective(input);
    } else if (a.variant == "generic") {
        if (a.data.empty())
            throw ValidationError("--variant generic needs --data with fiber rows");
        const std::vector<GenericFiberEntry> rows =
            fiber_rows_from_json(load_json_file(a.data), input.strands());
        p = presentation_generic(input, rows, !a.no_surjection);
    } else {
        throw ValidationError("unknown zvk variant \"" + a.variant + "\"");
    }
    emit(presentation_to_json(p), a.out);
}

struct FileArgs {
    std::string in, out;
};

void run_abelianize(const FileArgs& a) {
    const GroupPresentation p = presentation_from_json(load_json_file(a.in));
    Json j;
    j["invariant_factors"] = abelianize(p);
    emit(j, a.out);
}

struct SimplifyArgs {
    int budget = 1000;
    std::string in, out;
};

void run_simplify(const SimplifyArgs& a) {
    const GroupPresentation p = presentation_from_json(load_json_file(a.in));
    emit(presentation_to_json(tietze_simplify(p, a.budget)), a.out);
}

struct SingularArgs {
    int n = 1;
    std::string data, out;
};

void run_singular_transform(const SingularArgs& a, bool type1) {
    const LocalPointData input = local_point_from_json(load_json_file(a.data));
    const LocalPointData result =
        type1 ? transform_type1(a.n, input) : transform_type0(a.n, input);
    emit(local_point_to_json(result), a.out);
}

struct RealCubicArgs {
    std::string a1, a2, a3;
    std::string out;
};

void run_realcubic(const RealCubicArgs& a) {
    const auto b = real_part_cubic(rational_from_text(a.a1),
                                   rational_from_text(a.a2),
                                   rational_from_text(a.a3));
    Json j = Json::array();
    for (const Rational& r : b)
        j.push_back(rational_to_text(r));
    emit(j, a.out);
}

struct ExampleArgs {
    std::string name;
    std::string report;
    std::string out;
};

void run_example(const ExampleArgs& a) {
    const PipelineReport rep = run_pipeline(a.name);
    if (!a.report.empty()) {
        Json j;
        j["name"] = rep.name;
        j["notes"] = rep.notes;
        j["soft_diffs"] = rep.soft_diffs;
        j["result"] = factorization_to_json(rep.result);
        write_json_file(a.report, j);
    }
    emit(factorization_to_json(rep.result), a.out);
}

struct VerifyArgs {
    std::string file;
    bool generic = false;
};

void run_verify(const VerifyArgs& a) {
    const Factorization f = factorization_from_json(load_json_file(a.file));
    if (a.generic && !is_generic(f))
        throw OracleMismatchError(
            "pseudo-Coxeter element differs from the full twist on " +
            std::to_string(f.strands()) + " strands");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Braid monodromy toolkit: Kummer-cover lifts, Hurwitz moves, "
                 "generification and Zariski-van Kampen presentations"};
    app.require_subcommand(1);

    LiftArgs lift_args;
    CLI::App* lift = app.add_subcommand(
        "lift", "Lift a marked factorization through the degree-n cover");
    lift->add_option("--n", lift_args.n, "Cover degree (n = 1 is the identity)")
        ->required();
    lift->add_option("--system", lift_args.system,
                     "Generator system: circular, radial or straight2")
        ->default_val("circular");
    lift->add_flag("--forget", lift_args.forget,
                   "Delete the fixed strand from every output entry");
    lift->add_option("--in", lift_args.in, "Input factorization JSON")->required();
    lift->add_option("--out", lift_args.out, "Output path (default stdout)");

    HurwitzArgs hurwitz_args;
    CLI::App* hurw = app.add_subcommand(
        "hurwitz", "Apply a signed sequence of Hurwitz moves");
    hurw->add_option("--moves", hurwitz_args.moves,
                     "Signed move indices, e.g. \"1 -4 2\" (+i forward, -i inverse)")
        ->required();
    hurw->add_option("--in", hurwitz_args.in, "Input factorization JSON")
        ->required();
    hurw->add_option("--out", hurwitz_args.out, "Output path (default stdout)");

    ConjugateArgs conjugate_args;
    CLI::App* conj = app.add_subcommand(
        "conjugate", "Conjugate every entry by one braid");
    conj->add_option("--by", conjugate_args.by,
                     "Conjugating braid in text form, e.g. \"s1 s2^-1\"")
        ->required();
    conj->add_option("--in", conjugate_args.in, "Input factorization JSON")
        ->required();
    conj->add_option("--out", conjugate_args.out, "Output path (default stdout)");

    GenerifyArgs generify_args;
    CLI::App* gen = app.add_subcommand(
        "generify", "Replace a non-generic entry by its generic tuple");
    gen->add_option("--rule", generify_args.rule,
                    "cusp, node, inflection, local-split or arrangement")
        ->required();
    gen->add_option("--data", generify_args.data,
                    "Sidecar JSON describing the decomposition")
        ->required();
    gen->add_option("--in", generify_args.in,
                    "Input factorization JSON (not used by arrangement)");
    gen->add_option("--out", generify_args.out, "Output path (default stdout)");

    ZvkArgs zvk_args;
    CLI::App* zvk = app.add_subcommand(
        "zvk", "Fundamental-group presentation from a factorization");
    zvk->add_option("--variant", zvk_args.variant,
                    "affine, horizontal, projective or generic")
        ->required();
    zvk->add_option("--in", zvk_args.in, "Input factorization JSON")->required();
    zvk->add_option("--keep", zvk_args.keep,
                    "horizontal only: 1-based entry indices keeping their loop "
                    "generator, e.g. \"2 5\" (default none)");
    zvk->add_option("--data", zvk_args.data,
                    "generic only: fiber rows JSON (conjugator, local, indices)");
    zvk->add_flag("--no-surjection", zvk_args.no_surjection,
                  "generic only: keep all entries, add no surjection relator");
    zvk->add_option("--out", zvk_args.out, "Output path (default stdout)");

    FileArgs abelianize_args;
    CLI::App* abel = app.add_subcommand(
        "abelianize", "Invariant factors of the abelianized presentation");
    abel->add_option("--in", abelianize_args.in, "Input presentation JSON")
        ->required();
    abel->add_option("--out", abelianize_args.out, "Output path (default stdout)");

    SimplifyArgs simplify_args;
    CLI::App* simp = app.add_subcommand(
        "simplify", "Bounded deterministic Tietze simplification");
    simp->add_option("--budget", simplify_args.budget,
                     "Maximum number of generator eliminations")
        ->default_val(1000);
    simp->add_option("--in", simplify_args.in, "Input presentation JSON")
        ->required();
    simp->add_option("--out", simplify_args.out, "Output path (default stdout)");

    SingularArgs singular_args;
    RealCubicArgs realcubic_args;
    CLI::App* sing = app.add_subcommand(
        "singular", "Local invariants under the cover, and the real-part cubic");
    sing->require_subcommand(1);
    CLI::App* type1 = sing->add_subcommand(
        "type1", "Transform local data at a point on one axis");
    CLI::App* type0 = sing->add_subcommand(
        "type0", "Transform local data at the axes' intersection point");
    for (CLI::App* t : {type1, type0}) {
        t->add_option("--n", singular_args.n, "Cover degree")->required();
        t->add_option("--data", singular_args.data, "Local point data JSON")
            ->required();
        t->add_option("--out", singular_args.out, "Output path (default stdout)");
    }
    CLI::App* realcubic = sing->add_subcommand(
        "realcubic", "Cubic whose roots are the pairwise root averages");
    realcubic->add_option("a1", realcubic_args.a1, "Coefficient a1, e.g. -3/7")
        ->required();
    realcubic->add_option("a2", realcubic_args.a2, "Coefficient a2")->required();
    realcubic->add_option("a3", realcubic_args.a3, "Coefficient a3")->required();
    realcubic->add_option("--out", realcubic_args.out,
                          "Output path (default stdout)");

    ExampleArgs example_args;
    CLI::App* example = app.add_subcommand(
        "example", "Replay a named worked example from its stored data");
    std::string names_help = "Pipeline name:";
    for (const std::string& n : pipeline_names())
        names_help += " " + n;
    example->add_option("name", example_args.name, names_help)->required();
    example->add_option("--report", example_args.report,
                        "Also write the full replay report (notes, divergences)");
    example->add_option("--out", example_args.out,
                        "Result factorization path (default stdout)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Validate a factorization file, optionally its genericity");
    verify->add_option("file", verify_args.file, "Factorization JSON")
        ->required();
    verify->add_flag("--generic", verify_args.generic,
                     "Require the pseudo-Coxeter element to be the full twist");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 1;
    }

    try {
        if (lift->parsed())
            run_lift(lift_args);
        else if (hurw->parsed())
            run_hurwitz(hurwitz_args);
        else if (conj->parsed())
            run_conjugate(conjugate_args);
        else if (gen->parsed())
            run_generify(generify_args);
        else if (zvk->parsed())
            run_zvk(zvk_args);
        else if (abel->parsed())
            run_abelianize(abelianize_args);
        else if (simp->parsed())
            run_simplify(simplify_args);
        else if (sing->parsed()) {
            if (realcubic->parsed())
                run_realcubic(realcubic_args);
            else
                run_singular_transform(singular_args, type1->parsed());
        }
        else if (example->parsed())
            run_example(example_args);
        else if (verify->parsed())
            run_verify(verify_args);
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const OracleMismatchError& e) {
        std::fprintf(stderr, "oracle mismatch: %s\n", e.what());
        return 2;
    } catch (const ResourceLimitError& e) {
        std::fprintf(stderr, "resource cap: %s\n", e.what());
        return 3;
    }
    return 0;
}
