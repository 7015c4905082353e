// Command-line surface for the reversible-machine toolkit: file-in/file-out,
// line-oriented output, deterministic exit codes (0 success/true, 1 negative
// result, 2 usage or malformed input).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "rtm/codec.hpp"
#include "rtm/corpus.hpp"
#include "rtm/extract.hpp"
#include "rtm/inversion.hpp"
#include "rtm/machine_text.hpp"
#include "rtm/reductions.hpp"
#include "rtm/transform.hpp"

using namespace rtm;

namespace {

Machine load_machine_arg(const std::string& arg) {
    // corpus names resolve directly; anything else is a file path
    for (const auto& n : corpus_names())
        if (n == arg) return corpus_machine(arg);
    return load_machine_file(arg);
}

struct ProgramFile {
    Program program;
    Machine machine;
};

ProgramFile load_program_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open program file: " + path);
    std::string first;
    std::getline(f, first);
    std::stringstream rest;
    rest << f.rdbuf();
    auto colon = first.find(':');
    if (first.rfind("class", 0) != 0 || colon == std::string::npos)
        throw std::runtime_error("program file must begin with 'class: <tag>'");
    std::string tag = first.substr(colon + 1);
    tag.erase(0, tag.find_first_not_of(" \t"));
    tag.erase(tag.find_last_not_of(" \t\r") + 1);
    ProgramFile out;
    out.machine = parse_machine(rest.str());
    if (tag == "fP") out.program = Program::fp(out.machine);
    else if (tag == "invfP") out.program = Program::invfp(out.machine);
    else if (tag == "invfP-NP") out.program = Program::invfp_oracle(out.machine);
    else throw std::runtime_error("unknown program class tag: " + tag);
    return out;
}

std::optional<OracleFn> resolve_oracle(const std::string& name) {
    if (name.empty()) return std::nullopt;
    return oracle_lookup(name).membership;
}

int run_cmd(const std::string& machine_arg, const std::string& input,
            const std::string& oracle_name, bool show_steps) {
    Machine m = load_machine_arg(machine_arg);
    auto oracle = resolve_oracle(oracle_name);
    OracleFn fn;
    const OracleFn* op = nullptr;
    if (oracle) {
        fn = *oracle;
        op = &fn;
    }
    RunOutcome o = run(m, input, op);
    switch (o.tag) {
        case RunOutcome::Accept:
            std::cout << o.output << "\n";
            if (show_steps) std::cout << "steps: " << o.steps << "\n";
            return 0;
        case RunOutcome::Reject: std::cout << "reject\n"; return 1;
        case RunOutcome::TimeExceeded: std::cout << "time-exceeded\n"; return 1;
        case RunOutcome::BalanceViolated: std::cout << "balance-violated\n"; return 1;
        case RunOutcome::OracleMissing: std::cout << "oracle-missing\n"; return 2;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversible Turing machine and inverse-function toolkit"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for randomized sampling");

    // check
    auto* check = app.add_subcommand("check", "validate determinism/injectivity");
    std::string check_machine;
    bool check_injective = false;
    check->add_option("--machine", check_machine)->required();
    check->add_flag("--injective", check_injective, "also run the reverse-key scan");

    // run
    auto* runc = app.add_subcommand("run", "run a machine on an input");
    std::string run_machine, run_input, run_oracle;
    bool run_steps = false;
    runc->add_option("--machine", run_machine)->required();
    runc->add_option("--input", run_input, "bitstring (may be empty)");
    runc->add_option("--oracle", run_oracle, "oracle name from the registry");
    runc->add_flag("--steps", run_steps, "print the step count");

    // reverse
    auto* rev = app.add_subcommand("reverse", "emit the syntactic reverse");
    std::string rev_machine;
    rev->add_option("--machine", rev_machine)->required();

    // bennett
    auto* ben = app.add_subcommand("bennett", "history-tape embeddings");
    std::string ben_machine, ben_inverse;
    ben->add_option("--machine", ben_machine)->required();
    ben->add_option("--inverse", ben_inverse,
                    "inverse machine: emit the clean embedding instead of the pair embedding");

    // chain
    auto* chn = app.add_subcommand("chain", "compose two machines");
    std::string chn_first, chn_second;
    chn->add_option("--first", chn_first)->required();
    chn->add_option("--second", chn_second)->required();

    // simulate reverse oracle
    auto* sro = app.add_subcommand("fwdsim", "replace reverse oracle calls by forward calls");
    std::string sro_machine;
    sro->add_option("--machine", sro_machine)->required();

    // encode
    auto* enc = app.add_subcommand("encode", "prefix-code and pair utilities");
    std::string enc_code, enc_decode, enc_w, enc_x, enc_split, enc_serialize;
    enc->add_option("--code", enc_code, "emit code(x)");
    enc->add_option("--decode", enc_decode, "invert code(.)");
    enc->add_option("--pair-w", enc_w, "pair first component");
    enc->add_option("--pair-x", enc_x, "pair second component");
    enc->add_option("--split", enc_split, "pair_decode a string");
    enc->add_option("--serialize", enc_serialize, "machine file to serialize to bits");

    // eval
    auto* ev = app.add_subcommand("eval", "bounded evaluators");
    std::string ev_mode = "inj", ev_prog, ev_second, ev_input, ev_oracle;
    std::uint64_t ev_qa = 5;
    std::uint32_t ev_qk = 2;
    ev->add_option("--mode", ev_mode, "inj | cofp")->check(CLI::IsMember({"inj", "cofp"}));
    ev->add_option("--program", ev_prog, "program file (class header + machine text)")->required();
    ev->add_option("--second", ev_second, "fP program for cofp mode");
    ev->add_option("--input", ev_input);
    ev->add_option("--oracle", ev_oracle);
    ev->add_option("--q-a", ev_qa, "bound coefficient a");
    ev->add_option("--q-k", ev_qk, "bound exponent k");

    // invert
    auto* inv = app.add_subcommand("invert", "invert a machine-computed function");
    std::string inv_mode = "fmin", inv_machine, inv_output, inv_oracle;
    std::vector<std::string> inv_registry;
    inv->add_option("--mode", inv_mode, "fmin | levin")->check(CLI::IsMember({"fmin", "levin"}));
    inv->add_option("--machine", inv_machine)->required();
    inv->add_option("--output", inv_output, "target output bits");
    inv->add_option("--registry", inv_registry, "candidate inverter program files");
    inv->add_option("--oracle", inv_oracle);

    // lab
    auto* lab = app.add_subcommand("lab", "finite-function algebra on table files");
    std::string lab_op, lab_f, lab_g, lab_machine;
    std::size_t lab_maxlen = 3;
    lab->add_option("op", lab_op,
                    "extract | fmin | compose | inverse | coinverse | mutual | subinverse")
        ->required();
    lab->add_option("-f", lab_f, "first table file");
    lab->add_option("-g", lab_g, "second table file");
    lab->add_option("--machine", lab_machine, "machine for extract");
    lab->add_option("--max-len", lab_maxlen);

    // reduce
    auto* red = app.add_subcommand("reduce", "check reduction witnesses");
    std::string red_language;
    std::size_t red_window = 5;
    red->add_option("--language", red_language, "registry language with a verifier presentation")
        ->required();
    red->add_option("--window", red_window);

    // member
    auto* mem = app.add_subcommand("member", "oracle membership");
    std::string mem_oracle, mem_string, mem_file;
    mem->add_option("--oracle", mem_oracle, "registry name (or stanza name with --registry-file)");
    mem->add_option("--string", mem_string);
    mem->add_option("--registry-file", mem_file, "oracle registry file (stanzas)");

    // corpus
    auto* cor = app.add_subcommand("corpus", "built-in machines and acceptance suites");
    std::string cor_action, cor_arg;
    cor->add_option("action", cor_action, "list | show | verify")->required();
    cor->add_option("arg", cor_arg, "machine name, suite number, or 'all'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            Machine m = load_machine_arg(check_machine);
            auto det = validate_deterministic(m);
            std::cout << "deterministic: " << (det.ok() ? "yes" : "no") << "\n";
            for (const auto& c : det.conflicts) std::cout << "  " << c << "\n";
            if (!check_injective) return det.ok() ? 0 : 1;
            if (!det.ok()) return 1;
            auto inj = validate_injective(m);
            std::cout << "injective: " << (inj.ok() ? "yes" : "no") << "\n";
            for (const auto& c : inj.conflicts) std::cout << "  " << c << "\n";
            return inj.ok() ? 0 : 1;
        }
        if (*runc) return run_cmd(run_machine, run_input, run_oracle, run_steps);
        if (*rev) {
            ReverseResult r = reverse_machine(load_machine_arg(rev_machine));
            if (!r.injective_input)
                std::cerr << "note: source failed the injectivity scan; reverse is "
                             "nondeterministic\n";
            std::cout << print_machine(r.machine);
            return 0;
        }
        if (*ben) {
            Machine m = load_machine_arg(ben_machine);
            if (ben_inverse.empty()) {
                std::cout << print_machine(bennett_garbage(m));
            } else {
                Machine fi = load_machine_arg(ben_inverse);
                std::cout << print_machine(bennett_clean(m, fi));
            }
            return 0;
        }
        if (*chn) {
            std::cout << print_machine(
                chain_machines(load_machine_arg(chn_first), load_machine_arg(chn_second)));
            return 0;
        }
        if (*sro) {
            std::cout << print_machine(simulate_reverse_oracle(load_machine_arg(sro_machine)));
            return 0;
        }
        if (*enc) {
            if (!enc_code.empty() || enc->count("--code")) std::cout << code_bits(enc_code) << "\n";
            if (enc->count("--decode")) {
                auto d = decode_bits(enc_decode);
                if (!d) {
                    std::cout << "not-a-codeword\n";
                    return 1;
                }
                std::cout << *d << "\n";
            }
            if (enc->count("--pair-w") || enc->count("--pair-x"))
                std::cout << pair_encode(enc_w, enc_x) << "\n";
            if (enc->count("--split")) {
                auto p = pair_decode(enc_split);
                if (!p) {
                    std::cout << "not-a-pair\n";
                    return 1;
                }
                std::cout << p->first << "\n" << p->second << "\n";
            }
            if (enc->count("--serialize"))
                std::cout << serialize_machine(load_machine_arg(enc_serialize)) << "\n";
            return 0;
        }
        if (*ev) {
            PolyBound q(ev_qa, ev_qk);
            auto oracle = resolve_oracle(ev_oracle);
            OracleFn fn;
            const OracleFn* op = nullptr;
            if (oracle) {
                fn = *oracle;
                op = &fn;
            }
            ProgramFile pf = load_program_file(ev_prog);
            if (ev_mode == "inj") {
                Bits s = pair_encode(pf.program.bits, ev_input);
                std::cout << inj_ev(q, s, op) << "\n";
                return 0;
            }
            if (ev_second.empty()) throw CLI::ValidationError("cofp mode needs --second");
            ProgramFile wf = load_program_file(ev_second);
            auto out = cofp_eval(q, pf.program, wf.program, ev_input, op);
            if (!out) {
                std::cout << "no-output\n";
                return 1;
            }
            std::cout << *out << "\n";
            return 0;
        }
        if (*inv) {
            Machine m = load_machine_arg(inv_machine);
            auto oracle = resolve_oracle(inv_oracle);
            OracleFn fn;
            const OracleFn* op = nullptr;
            if (oracle) {
                fn = *oracle;
                op = &fn;
            }
            if (inv_mode == "fmin") {
                auto x = fmin_invert(m, inv_output, op);
                if (!x) {
                    std::cout << "not-in-image\n";
                    return 1;
                }
                std::cout << *x << "\n";
                return 0;
            }
            std::vector<Program> registry;
            for (const auto& path : inv_registry) registry.push_back(load_program_file(path).program);
            Program target = m.oracle_name ? Program::invfp_oracle(m) : Program::fp(m);
            LevinResult r = levin_invert(registry, target, inv_output, op);
            if (!r.preimage) {
                std::cout << "not-in-image\n";
                return 1;
            }
            std::cout << *r.preimage << "\n";
            std::cout << "steps: " << r.stats.steps_total
                      << " winner: " << (r.stats.winner_is_fallback
                                             ? std::string("fallback")
                                             : std::to_string(r.stats.winner ? *r.stats.winner : 0))
                      << "\n";
            return 0;
        }
        if (*lab) {
            auto load_fn = [](const std::string& path) {
                std::ifstream f(path);
                if (!f) throw std::runtime_error("cannot open table file: " + path);
                std::stringstream ss;
                ss << f.rdbuf();
                return FiniteFn::from_text(ss.str());
            };
            if (lab_op == "extract") {
                Machine m = load_machine_arg(lab_machine);
                const OracleFn even = oracle_lookup("evenweight").membership;
                const OracleFn* op = m.oracle_name ? &even : nullptr;
                std::cout << extract_fn(m, lab_maxlen, op).to_text();
                return 0;
            }
            if (lab_op == "fmin") {
                std::cout << fmin(load_fn(lab_f)).to_text();
                return 0;
            }
            if (lab_op == "compose") {
                std::cout << compose(load_fn(lab_f), load_fn(lab_g)).to_text();
                return 0;
            }
            bool verdict = false;
            if (lab_op == "inverse") verdict = is_inverse(load_fn(lab_f), load_fn(lab_g));
            else if (lab_op == "coinverse") verdict = is_coinverse(load_fn(lab_f), load_fn(lab_g));
            else if (lab_op == "mutual") verdict = is_mutual_inverse(load_fn(lab_f), load_fn(lab_g));
            else if (lab_op == "subinverse") verdict = is_subinverse(load_fn(lab_f), load_fn(lab_g));
            else throw CLI::ValidationError("unknown lab op: " + lab_op);
            std::cout << (verdict ? "true" : "false") << "\n";
            return verdict ? 0 : 1;
        }
        if (*red) {
            OracleLanguage L = oracle_lookup(red_language);
            const VerifierEntry* entry = nullptr;
            for (const auto& e : verifier_registry())
                if (e.language == red_language) entry = &e;
            if (!entry) throw std::runtime_error("no verifier presentation for " + red_language);
            OracleLanguage uni = oracle_lookup("universal");
            ReductionWitness w;
            w.kind = ReductionKind::InvFP;
            w.window_len = red_window;
            w.f = [&](const Bits& x) -> std::optional<Bits> {
                return hartmanis_map(entry->program, entry->time, x);
            };
            ReductionReport rep = check_reduction(w, L, uni);
            std::cout << (rep.ok() ? "reduction: ok" : "reduction: fails") << "\n";
            for (const auto& c : rep.counterexamples) std::cout << "  " << c << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (*mem) {
            OracleLanguage L;
            if (!mem_file.empty()) {
                std::ifstream f(mem_file);
                if (!f) throw std::runtime_error("cannot open registry file: " + mem_file);
                std::stringstream ss;
                ss << f.rdbuf();
                auto stanzas = parse_oracle_file(ss.str());
                bool found = false;
                for (auto& s : stanzas)
                    if (mem_oracle.empty() || s.name == mem_oracle) {
                        L = s;
                        found = true;
                        break;
                    }
                if (!found) throw std::runtime_error("UnknownOracle: " + mem_oracle);
            } else {
                if (mem_oracle.empty()) throw CLI::ValidationError("member needs --oracle");
                L = oracle_lookup(mem_oracle);
            }
            bool in = L.membership(mem_string);
            std::cout << (in ? "true" : "false") << "\n";
            return in ? 0 : 1;
        }
        if (*cor) {
            if (cor_action == "list") {
                for (const auto& n : corpus_names()) std::cout << n << "\n";
                return 0;
            }
            if (cor_action == "show") {
                std::cout << print_machine(corpus_machine(cor_arg));
                return 0;
            }
            if (cor_action == "verify") {
                std::vector<CriterionResult> results;
                if (cor_arg.empty() || cor_arg == "all") {
                    results = run_all_criteria(seed);
                } else {
                    results.push_back(run_criterion(std::stoi(cor_arg), seed));
                }
                bool all = true;
                for (const auto& r : results) {
                    std::printf("%s criterion %2d: %s (%s, %.2fs)\n", r.passed ? "PASS" : "FAIL",
                                r.number, r.label.c_str(), r.detail.c_str(), r.seconds);
                    all = all && r.passed;
                }
                return all ? 0 : 1;
            }
            throw CLI::ValidationError("unknown corpus action: " + cor_action);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
