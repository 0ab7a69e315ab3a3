// repdim: command-line driver for the verifier.
//
// Exit codes: 0 ok, 1 a check failed, 2 undecided (isomorphism search or
// depth cap), 3 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "repdim/orchestrate.hpp"

using namespace repdim;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUndecided = 2;
constexpr int kInput = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_n(int n)
{
    if (n < 0)
        throw InputError("--n must be >= 0, got " + std::to_string(n));
}

FieldSpec parse_field(const std::string& text)
{
    try {
        return FieldSpec::parse(text);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

SummandLabel parse_target(const std::string& text, int n)
{
    try {
        return parse_label(text, n);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

int verdict_code(const std::string& verdict)
{
    if (verdict == "theorem-checked")
        return kOk;
    if (verdict == "undecided")
        return kUndecided;
    return kFailed;
}

struct VerifyArgs {
    std::string kind;
    int n = 0;
    std::string field = "q";
    std::size_t cap = 10;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    int witnesses = 10;
    std::string out;
    bool timing = false;
    std::vector<std::string> drop, duplicate;
};

int cmd_verify(const VerifyArgs& a)
{
    require_n(a.n);
    const auto spec = parse_field(a.field);
    VerificationOptions opt;
    opt.cap = a.cap;
    opt.seed = a.seed;
    opt.jobs = a.jobs;
    opt.witness_count = a.witnesses;
    for (const auto& d : a.drop)
        opt.drop.push_back(parse_target(d, a.n));
    for (const auto& d : a.duplicate)
        opt.duplicate.push_back(parse_target(d, a.n));

    const auto start = std::chrono::steady_clock::now();
    VerificationCertificate cert = with_field(spec, [&](const auto& field) {
        try {
            if (a.kind == "an")
                return verify_An(field, a.n, opt);
            if (a.kind == "lambda")
                return verify_Lambda(field, a.n, opt);
            return auslander_sanity(field, a.n, opt);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        } catch (const std::out_of_range& e) {
            throw InputError(e.what());
        }
    });
    if (a.timing)
        cert.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                                  start)
                              .count();

    const std::string doc = certificate_json(cert);
    if (a.out.empty()) {
        std::cout << doc;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f)
            throw InputError("cannot write " + a.out);
        f << doc;
        std::cerr << a.out << ": " << cert.verdict << "\n";
    }
    if (!cert.failure.empty())
        std::cerr << "failure: " << cert.failure << "\n";
    return verdict_code(cert.verdict);
}

std::string join(std::vector<SummandLabel> labels)
{
    std::sort(labels.begin(), labels.end());
    std::string s;
    for (const auto& l : labels)
        s += (s.empty() ? "" : ", ") + l.str();
    return s;
}

int cmd_resolve(int n, const std::string& field_text, const std::string& target_text, std::size_t cap, bool as_json)
{
    require_n(n);
    const auto spec = parse_field(field_text);
    const auto target = parse_target(target_text, n);
    return with_field(spec, [&](const auto& field) {
        const auto set = build_Mn(field, n);
        const auto idx = set.index_of(target);
        if (!idx)
            throw InputError(target.str() + " is not a summand of M_" + std::to_string(n));
        const auto table = build_hom_table(set);
        ResolutionCertificate rc;
        try {
            rc = resolve_simple(set, table, *idx, cap);
        } catch (const CapExceeded& e) {
            std::cerr << e.what() << "\n";
            return kUndecided;
        } catch (const CheckFailure& e) {
            std::cerr << e.what() << "\n";
            return kFailed;
        }
        if (as_json) {
            VerificationCertificate cert;
            cert.kind = "an";
            cert.n = n;
            cert.field = field.name();
            cert.resolutions.push_back(rc);
            std::cout << certificate_json(cert);
            return kOk;
        }
        std::cout << "pd " << rc.pd;
        for (std::size_t d = 0; d < rc.terms.size(); ++d)
            std::cout << "; deg" << d + 1 << ": " << join(rc.terms[d].summands);
        std::cout << "\n";
        return kOk;
    });
}

int cmd_show(int n, const std::string& label_text)
{
    require_n(n);
    const auto label = parse_target(label_text, n);
    const Rationals field;
    const auto alg = label.kind == SummandLabel::Kind::Lambda ? lambda_algebra(n) : an_algebra(n);
    try {
        std::cout << render_module(named_module(field, label, alg));
    } catch (const std::out_of_range& e) {
        throw InputError(e.what());
    }
    return kOk;
}

int cmd_recipe(int n, std::uint64_t seed)
{
    require_n(n);
    if (n < 1)
        throw InputError("recipe needs --n >= 1");
    const Rationals field;
    const auto res = build_Mn_by_recipe(field, n, seed);
    std::cout << "recipe M_" << n - 1 << " -> M_" << n << "\n";
    std::cout << "removed: " << join(res.removed) << "\n";
    std::cout << "added: " << join(res.added) << "\n";
    std::cout << "kept: " << join(res.kept) << "\n";
    for (const auto& r : res.rejections)
        std::cout << "rejected: " << r << "\n";
    for (const auto& rm : res.modules)
        if (!rm.label)
            std::cout << "unmatched: " << rm.origin << " (dim " << rm.module.dim() << ")\n";
    if (!res.missing.empty())
        std::cout << "missing: " << join(res.missing) << "\n";
    std::cout << "summands: " << res.modules.size() << " (closed form " << mn_labels(n).size() << ")\n";
    std::cout << (res.equal ? "PASS" : "FAIL") << "\n";
    return res.equal ? kOk : kFailed;
}

int cmd_witness(int n, int count, const std::string& field_text, std::uint64_t seed)
{
    require_n(n);
    if (count < 2)
        throw InputError("--count must be >= 2");
    const auto spec = parse_field(field_text);
    return with_field(spec, [&](const auto& field) {
        const auto rep = witness_infinite_type(field, an_algebra(n), count, seed);
        std::cout << rep.detail << "\n";
        std::cout << "dims:";
        for (auto d : rep.dims)
            std::cout << " " << d;
        std::cout << "\n";
        return rep.ok ? kOk : kFailed;
    });
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"certified representation-dimension checks for k[x,y]/(x^2, y^(n+2)) and its socle quotient"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the full check and emit a JSON certificate");
    verify->add_option("kind", va.kind, "an | lambda | auslander (n is then m)")
        ->required()
        ->check(CLI::IsMember({"an", "lambda", "auslander"}));
    verify->add_option("--n", va.n, "algebra parameter")->required();
    verify->add_option("--field", va.field, "q | f2 | fp:P");
    verify->add_option("--cap", va.cap, "resolution depth cap");
    verify->add_option("--seed", va.seed, "seed for randomized searches");
    verify->add_option("--jobs", va.jobs, "worker threads");
    verify->add_option("--witnesses", va.witnesses, "number of zigzag witnesses");
    verify->add_option("--out", va.out, "write the certificate here instead of stdout");
    verify->add_flag("--timing", va.timing, "record runtime_ms (output is then not reproducible)");
    verify->add_option("--drop", va.drop, "negative control: remove a summand");
    verify->add_option("--duplicate", va.duplicate, "negative control: repeat a summand");

    int rn = 0;
    std::string rfield = "q", rtarget;
    std::size_t rcap = 10;
    bool rjson = false;
    auto* resolve = app.add_subcommand("resolve", "minimal resolution of one simple End(M_n)-module");
    resolve->add_option("--n", rn)->required();
    resolve->add_option("--field", rfield);
    resolve->add_option("--target", rtarget, "summand label, e.g. A[3,0], U[2], X, P")->required();
    resolve->add_option("--cap", rcap);
    resolve->add_flag("--json", rjson);

    int sn = 0;
    std::string smodule;
    auto* show = app.add_subcommand("show", "ASCII picture of a named module");
    show->add_option("--n", sn)->required();
    show->add_option("--module", smodule)->required();

    int cn = 1;
    std::uint64_t cseed = 0;
    auto* recipe = app.add_subcommand("recipe", "build M_n from M_(n-1) by the vertex-on-top recipe and diff");
    recipe->add_option("--n", cn)->required();
    recipe->add_option("--seed", cseed);

    int wn = 0, wcount = 10;
    std::string wfield = "q";
    std::uint64_t wseed = 0;
    auto* witness = app.add_subcommand("witness", "certified indecomposables of growing dimension");
    witness->add_option("--n", wn)->required();
    witness->add_option("--count", wcount);
    witness->add_option("--field", wfield);
    witness->add_option("--seed", wseed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*verify)
            return cmd_verify(va);
        if (*resolve)
            return cmd_resolve(rn, rfield, rtarget, rcap, rjson);
        if (*show)
            return cmd_show(sn, smodule);
        if (*recipe)
            return cmd_recipe(cn, cseed);
        if (*witness)
            return cmd_witness(wn, wcount, wfield, wseed);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const Undecided& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kUndecided;
    } catch (const CapExceeded& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kUndecided;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kFailed;
    }
    return kInput;
}
