#include "gqlrc/codes.hpp"
#include "gqlrc/egg.hpp"
#include "gqlrc/gq.hpp"
#include "gqlrc/io.hpp"
#include "gqlrc/lrc.hpp"
#include "gqlrc/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

using namespace gqlrc;

struct GqSpec {
    std::string gq;
    unsigned p = 0;
    unsigned h = 1;
    std::uint64_t q = 0;
    unsigned n = 1;
    unsigned m = 0; // 0: derived from the kind
    std::string in;
    bool strict = false;
};

Field resolve_field(const GqSpec& spec) {
    unsigned p = spec.p, h = spec.h;
    if (spec.q != 0) {
        std::uint64_t q = spec.q;
        unsigned base = 0;
        for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d)
            if (q % d == 0) {
                base = d;
                break;
            }
        if (base == 0) base = static_cast<unsigned>(q); // q itself prime
        unsigned e = 0;
        std::uint64_t acc = 1;
        while (acc < q) {
            acc *= base;
            ++e;
        }
        if (acc != q)
            throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
        p = base;
        h = e;
    }
    if (p == 0) throw std::invalid_argument("specify the field with --q or --p/--h");
    return Field::create(p, h);
}

IncidenceStructure build_structure(const GqSpec& spec, std::ostream& log) {
    if (spec.gq == "egg-file") {
        if (spec.in.empty()) throw std::invalid_argument("--gq egg-file needs --in <file>");
        EggReport rep;
        Egg egg = load_egg(spec.in, &rep);
        log << "egg verification: " << (rep.pass ? "pass" : "FAIL") << " (" << rep.summary()
            << ")\n";
        if (!rep.pass && spec.strict)
            throw std::runtime_error("egg verification failed (strict mode)");
        if (spec.m != 0 && spec.m != egg.m)
            throw std::invalid_argument("--m does not match the egg file");
        return build_te(egg);
    }
    Field F = resolve_field(spec);
    auto check_m = [&](unsigned derived) {
        if (spec.m != 0 && spec.m != derived)
            throw std::invalid_argument("--m is " + std::to_string(spec.m) +
                                        " but this construction has m = " +
                                        std::to_string(derived));
    };
    if (spec.gq == "w3") return build_classical(GqKind::W3, F);
    if (spec.gq == "q4") return build_classical(GqKind::Q4, F);
    if (spec.gq == "q5") return build_classical(GqKind::Q5, F);
    if (spec.gq == "h3") return build_classical(GqKind::H3, F);
    if (spec.gq == "h4") return build_classical(GqKind::H4, F);
    if (spec.gq == "t2star") return build_t2star(F);
    if (spec.gq == "te-conic") {
        check_m(spec.n);
        return build_te(conic_egg(F, spec.n));
    }
    if (spec.gq == "te-ovoid") {
        check_m(2 * spec.n);
        return build_te(ovoid_egg(F, spec.n));
    }
    throw std::invalid_argument("unknown --gq kind: " + spec.gq);
}

unsigned alphabet_of(const GqSpec& spec) {
    if (spec.gq == "egg-file") {
        json j = json::parse(read_text_file(spec.in));
        return j.at("p").get<unsigned>();
    }
    return resolve_field(spec).p();
}

void add_gq_flags(CLI::App* cmd, GqSpec& spec) {
    cmd->set_help_flag("--help", "print help"); // frees -h / --h for the field degree
    cmd->add_option("--gq", spec.gq,
                    "one of w3|q4|q5|h3|h4|t2star|te-conic|te-ovoid|egg-file");
    cmd->add_option("--p", spec.p, "field characteristic");
    cmd->add_option("--h", spec.h, "extension degree (default 1)");
    cmd->add_option("--q", spec.q, "field order, shorthand for --p/--h");
    cmd->add_option("--n", spec.n,
                    "field-reduction degree for te-conic/te-ovoid (default 1)");
    cmd->add_option("--m", spec.m, "egg parameter m, validated against the construction");
    cmd->add_option("--in", spec.in, "egg input file for --gq egg-file");
    cmd->add_flag("--strict", spec.strict, "fail on egg verification errors");
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("GQLRC_BUDGET")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000'000;
}

void print_structure_summary(const IncidenceStructure& is, std::ostream& out) {
    out << is.kind << ": " << is.num_points() << " points, " << is.num_lines()
        << " lines";
    if (is.params)
        out << ", order (s,t,alpha) = (" << is.params->s << "," << is.params->t << ","
            << is.params->alpha << ")";
    out << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalised quadrangles, their p-ary codes and repair metrics"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    GqSpec spec;
    std::string out_path, format = "json", method = "auto", matrix_kind = "incidence";
    unsigned wmax = 0;
    std::uint64_t budget = default_budget();
    std::uint64_t seed = 2024;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string only;
    std::string in_structure;
    std::string in_code;

    auto* b = app.add_subcommand("build", "construct a GQ and export it as JSON");
    add_gq_flags(b, spec);
    b->add_option("--out", out_path, "output file for the structure JSON");

    auto* md = app.add_subcommand("mindist", "minimum distance and minimum-weight words");
    add_gq_flags(md, spec);
    md->add_option("--in-structure", in_structure, "analyze a structure JSON instead of --gq");
    md->add_option("--in-code", in_code, "analyze an exported code JSON instead of --gq");
    md->add_option("--method", method, "auto|sweep|exhaustive|bz");
    md->add_option("--wmax", wmax, "sweep bound (default s+1)");
    md->add_option("--budget", budget, "candidate budget");
    md->add_option("--threads", threads, "worker threads for the sweep");
    md->add_option("--out", out_path, "output file for the report JSON");

    auto* lr = app.add_subcommand("lrc-report", "repair degree and availability of the dual code");
    add_gq_flags(lr, spec);
    lr->add_option("--budget", budget, "candidate budget");
    lr->add_option("--threads", threads, "worker threads");
    lr->add_option("--out", out_path, "output file for the profile JSON");

    auto* ex = app.add_subcommand("export", "export the incidence matrix or code bases");
    add_gq_flags(ex, spec);
    ex->add_option("--format", format, "json|csv|alist");
    ex->add_option("--matrix", matrix_kind, "incidence|basis|dual");
    ex->add_option("--out", out_path, "output file")->required();

    auto* st = app.add_subcommand("selftest", "run the full verification suite");
    st->add_option("--only", only, "run a single check by id");
    st->add_option("--budget", budget, "candidate budget");
    st->add_option("--seed", seed, "seed for the randomized checks");
    st->add_option("--threads", threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (b->parsed()) {
            IncidenceStructure is = build_structure(spec, std::cout);
            print_structure_summary(is, std::cout);
            if (!out_path.empty())
                write_text_file(out_path, structure_to_json(is).dump(2) + "\n");
            return 0;
        }

        if (md->parsed()) {
            IncidenceStructure is;
            bool have_structure = in_code.empty();
            LinearCode code;
            if (!in_code.empty()) {
                auto [cp, rows] = code_rows_from_json(json::parse(read_text_file(in_code)));
                code = code_from_matrix(rows, cp);
            } else if (!in_structure.empty()) {
                is = structure_from_json(json::parse(read_text_file(in_structure)));
                if (spec.p == 0 && spec.q == 0)
                    throw std::invalid_argument("--in-structure needs --p or --q for the alphabet");
                unsigned p = spec.q ? resolve_field(spec).p() : spec.p;
                print_structure_summary(is, std::cout);
                code = code_from_structure(is, p);
            } else {
                is = build_structure(spec, std::cout);
                print_structure_summary(is, std::cout);
                code = code_from_structure(is, alphabet_of(spec));
            }
            std::cout << "code: p=" << code.p << " length=" << code.length
                      << " k=" << code.k << "\n";
            unsigned bound = wmax;
            if (md->count("--wmax") == 0)
                bound = have_structure && is.params
                            ? static_cast<unsigned>(is.params->s) + 1
                            : static_cast<unsigned>(code.length);

            MinWeightReport rep;
            if (method == "sweep" || method == "auto") {
                rep = min_weight_sweep(code, bound, {budget, threads});
                if (rep.status == MwStatus::budget_exceeded && method == "auto") {
                    BzResult bz = min_distance_bz(code);
                    rep.method = "bz";
                    rep.status = MwStatus::found;
                    rep.d = bz.d;
                    rep.complete = false;
                    rep.words = {bz.witness};
                    rep.note += "; sweep over budget, distance from bz without the word list";
                }
            } else if (method == "exhaustive") {
                rep = min_distance_exhaustive(code, budget);
            } else if (method == "bz") {
                BzResult bz = min_distance_bz(code);
                rep.method = "bz";
                rep.status = MwStatus::found;
                rep.d = bz.d;
                rep.complete = false;
                rep.words = {bz.witness};
            } else {
                throw std::invalid_argument("unknown --method: " + method);
            }

            if (rep.status == MwStatus::found && rep.complete && have_structure) {
                Classification cls = classify_min_words(rep, is);
                rep.all_line_multiples = cls.all_line_multiples;
            }
            switch (rep.status) {
                case MwStatus::found:
                    std::cout << "minimum distance d = " << rep.d << " (" << rep.method
                              << (rep.complete ? ", complete" : "") << "), "
                              << rep.words.size() << " words";
                    if (rep.complete && have_structure)
                        std::cout << (rep.all_line_multiples
                                          ? ", all scalar multiples of lines"
                                          : ", NOT all line multiples");
                    std::cout << "\n";
                    break;
                case MwStatus::none_within_wmax:
                    std::cout << "no codeword of weight <= " << rep.w_max << "\n";
                    break;
                case MwStatus::budget_exceeded:
                    std::cout << rep.note << "\n";
                    break;
            }
            if (!out_path.empty())
                write_text_file(out_path, report_to_json(rep).dump(2) + "\n");
            return rep.status == MwStatus::budget_exceeded ? 2 : 0;
        }

        if (lr->parsed()) {
            IncidenceStructure is = build_structure(spec, std::cout);
            print_structure_summary(is, std::cout);
            unsigned p = alphabet_of(spec);
            RepairProfile prof = lrc_profile(is, p, {budget, threads, 0});
            std::cout << "repair degree r = " << prof.r << " (s = " << prof.s << ", "
                      << (prof.closed_form_r ? "matches r = s" : "differs from r = s") << ")\n";
            std::cout << "repair availability a = " << prof.a << " ((p-1)(t+1) = "
                      << static_cast<std::uint64_t>(p - 1) * (prof.t + 1) << ", "
                      << (prof.closed_form_a ? "matches" : "differs") << ")\n";
            BoundCheck bc = check_bounds(prof);
            std::cout << "bounds: " << bc.detail << "\n";
            if (!out_path.empty())
                write_text_file(out_path, profile_to_json(prof).dump(2) + "\n");
            return bc.hard_fail ? 1 : 0;
        }

        if (ex->parsed()) {
            IncidenceStructure is = build_structure(spec, std::cout);
            unsigned p = alphabet_of(spec);
            LinearCode code = code_from_structure(is, p);
            const std::vector<std::vector<std::uint8_t>>* rows = nullptr;
            if (matrix_kind == "incidence")
                rows = &code.gen_rows;
            else if (matrix_kind == "basis")
                rows = &code.basis;
            else if (matrix_kind == "dual")
                rows = &code.dual;
            else
                throw std::invalid_argument("unknown --matrix: " + matrix_kind);

            std::string payload;
            if (format == "alist") {
                payload = to_alist(*rows);
                if (from_alist(payload) != *rows)
                    throw std::logic_error("alist round-trip mismatch");
            } else if (format == "csv") {
                payload = to_csv(*rows);
                if (from_csv(payload) != *rows)
                    throw std::logic_error("csv round-trip mismatch");
            } else if (format == "json") {
                json j = code_to_json(code, *rows);
                payload = j.dump(2) + "\n";
                if (code_rows_from_json(json::parse(payload)).second != *rows)
                    throw std::logic_error("json round-trip mismatch");
            } else {
                throw std::invalid_argument("unknown --format: " + format);
            }
            write_text_file(out_path, payload);
            std::cout << "wrote " << rows->size() << "x" << (*rows)[0].size() << " "
                      << matrix_kind << " matrix to " << out_path << " (" << format
                      << ")\n";
            return 0;
        }

        if (st->parsed()) {
            selftest::Options opt;
            opt.budget = budget;
            opt.threads = threads;
            opt.seed = seed;
            opt.only = only;
            auto results = selftest::run_all(opt);
            bool all = true;
            for (const auto& r : results) {
                std::cout << selftest::format_line(r) << "\n";
                all = all && r.pass;
            }
            std::cout << (all ? "all checks passed" : "FAILURES present") << "\n";
            return all ? 0 : 1;
        }
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
