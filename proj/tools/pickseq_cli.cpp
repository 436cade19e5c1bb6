// Command-line front end. Everything goes through the public C API in
// pickseq/pickseq.h; this file only parses arguments, shuttles JSON, and
// formats output.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pickseq/pickseq.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFalsified = 2;

struct CString {
    char* ptr = nullptr;
    ~CString() { pickseq_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitUsage);
}

void require_ok(pickseq_status status) {
    if (status != PICKSEQ_OK) die(pickseq_last_error());
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) die("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct InstanceHandle {
    pickseq_instance* ptr = nullptr;
    ~InstanceHandle() { pickseq_instance_free(ptr); }
};

struct SequenceHandle {
    pickseq_sequence* ptr = nullptr;
    ~SequenceHandle() { pickseq_sequence_free(ptr); }
};

void load_instance(const std::string& path, InstanceHandle& inst) {
    require_ok(pickseq_instance_parse(read_input(path).c_str(), &inst.ptr));
}

void load_sequence(const std::string& text, const std::string& make, int agents, int goods,
                   SequenceHandle& seq) {
    if (!make.empty()) {
        require_ok(pickseq_sequence_make(make.c_str(), agents, goods, &seq.ptr));
    } else if (!text.empty()) {
        require_ok(pickseq_sequence_parse(text.c_str(), agents, &seq.ptr));
    } else {
        die("need --sequence TEXT or --make KIND");
    }
}

std::string classification_line(const json& doc) {
    std::ostringstream out;
    out << doc["sequence"].get<std::string>() << "  ";
    if (!doc["recursively_balanced"].get<bool>()) {
        out << "not recursively balanced";
        return out.str();
    }
    if (!doc["balanced_member"].get<bool>()) {
        out << "recursively balanced, outside R_{n,m} (prefix not 1..n)";
        return out.str();
    }
    out << (doc["irregular"].get<bool>() ? "irregular" : "regular");
    out << "  alpha=" << doc["alpha"].get<std::string>();
    bool best = doc["best"].get<bool>();
    bool worst = doc["worst"].get<bool>();
    out << (best && worst ? "  [best+worst]" : best ? "  [best]" : worst ? "  [worst]" : "  [neither]");
    return out.str();
}

int cmd_simulate(const std::string& instance_path, const std::string& seq_text,
                 const std::string& make, const std::string& format) {
    InstanceHandle inst;
    load_instance(instance_path, inst);
    SequenceHandle seq;
    load_sequence(seq_text, make, pickseq_instance_agents(inst.ptr), pickseq_instance_goods(inst.ptr), seq);
    CString out;
    require_ok(pickseq_simulate(inst.ptr, seq.ptr, &out.ptr));
    if (format == "json") {
        std::cout << out.str() << "\n";
        return kExitOk;
    }
    json doc = json::parse(out.str());
    std::cout << "sequence:    " << doc["sequence"].get<std::string>() << "\n";
    const auto& bundles = doc["allocation"]["bundles"];
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        std::cout << "agent " << i + 1 << " gets {";
        for (std::size_t k = 0; k < bundles[i].size(); ++k)
            std::cout << (k ? "," : "") << "g" << bundles[i][k].get<int>();
        std::cout << "}  utility " << doc["welfare"]["per_agent"][i].get<std::string>() << "\n";
    }
    std::cout << "egalitarian: " << doc["welfare"]["egalitarian"].get<std::string>() << "\n";
    std::cout << "ef1:         " << (doc["ef1"]["satisfied"].get<bool>() ? "satisfied" : "violated") << "\n";
    return kExitOk;
}

int cmd_mms(const std::string& instance_path, const std::string& format) {
    InstanceHandle inst;
    load_instance(instance_path, inst);
    CString out;
    require_ok(pickseq_mms(inst.ptr, &out.ptr));
    if (format == "json") {
        std::cout << out.str() << "\n";
        return kExitOk;
    }
    json doc = json::parse(out.str());
    for (const auto& row : doc["agents"])
        std::cout << "agent " << row["agent"].get<int>() << "  MMS " << row["mms"].get<std::string>() << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& seq_text, int agents, const std::string& format) {
    SequenceHandle seq;
    require_ok(pickseq_sequence_parse(seq_text.c_str(), agents, &seq.ptr));
    CString out;
    require_ok(pickseq_classify(seq.ptr, &out.ptr));
    if (format == "json")
        std::cout << out.str() << "\n";
    else
        std::cout << classification_line(json::parse(out.str())) << "\n";
    return kExitOk;
}

int cmd_enumerate(int n, int m, const std::string& format) {
    CString out;
    require_ok(pickseq_census(n, m, &out.ptr));
    if (format == "json") {
        std::cout << out.str() << "\n";
        return kExitOk;
    }
    json doc = json::parse(out.str());
    std::cout << "|R_{" << n << "," << m << "}| = " << doc["total"].get<std::string>()
              << "  alpha_max=" << doc["alpha_max"].get<std::string>()
              << "  alpha_min=" << doc["alpha_min"].get<std::string>() << "\n";
    for (const auto& report : doc["sequences"]) std::cout << classification_line(report) << "\n";
    std::cout << "best: " << doc["best"].size() << "  worst: " << doc["worst"].size()
              << "  neither: " << doc["other"].size() << "\n";
    return kExitOk;
}

int cmd_generate(const std::string& name, int n, int m, const std::string& seq_text, int agent,
                 const std::string& format) {
    json params = json::object();
    params["n"] = n;
    params["m"] = m;
    if (!seq_text.empty()) params["sequence"] = seq_text;
    if (agent > 0) params["agent"] = agent;
    CString out;
    require_ok(pickseq_generate(name.c_str(), params.dump().c_str(), &out.ptr));
    json doc = json::parse(out.str());
    if (format == "json") {
        std::cout << out.str() << "\n";
        return kExitOk;
    }
    // Instance JSON prefixed by a provenance header; readers ignore comments.
    std::cout << "// " << doc["generator"].get<std::string>() << "\n";
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() != "instance" && it.key() != "generator")
            std::cout << "// " << it.key() << ": "
                      << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
    std::cout << doc["instance"].dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& theorem, int n, int m, int samples, long long seed,
               const std::string& mode, const std::string& format) {
    if ((n > 0) != (m > 0)) die("verify needs both --n and --m, or neither for the defaults");
    json params = json::object();
    if (n > 0 && m > 0) {
        params["n"] = n;
        params["m"] = m;
    }
    if (samples > 0) params["samples"] = samples;
    if (seed >= 0) params["seed"] = seed;
    if (!mode.empty()) params["mode"] = mode;
    int pass = 0;
    CString out;
    require_ok(pickseq_verify(theorem.c_str(), params.dump().c_str(), &pass, &out.ptr));
    json doc = json::parse(out.str());
    if (format == "json") {
        std::cout << out.str() << "\n";
    } else if (format == "csv") {
        std::cout << "theorem,n,m,verdict\n";
        for (const auto& c : doc["checks"])
            std::cout << c["theorem"].get<std::string>() << "," << c["n"].get<int>() << ","
                      << c["m"].get<int>() << "," << c["verdict"].get<std::string>() << "\n";
    } else {
        for (const auto& c : doc["checks"]) {
            std::cout << (c["verdict"].get<std::string>() == "pass" ? "[pass] " : "[FAIL] ")
                      << c["theorem"].get<std::string>() << " n=" << c["n"].get<int>()
                      << " m=" << c["m"].get<int>() << "  (" << c["instances_covered"].get<std::string>()
                      << " instances)\n";
        }
        std::cout << (pass ? "all checks passed" : "FALSIFIED: see counterexample in JSON output") << "\n";
    }
    return pass ? kExitOk : kExitFalsified;
}

int cmd_price(int n, int m, const std::string& seq_text, const std::string& space, int samples,
              long long seed, const std::string& format) {
    json params = json::object();
    params["n"] = n;
    params["m"] = m;
    params["sequence"] = seq_text;
    params["space"] = space;
    if (samples > 0) params["samples"] = samples;
    if (seed >= 0) params["seed"] = seed;
    CString out;
    require_ok(pickseq_price_search(params.dump().c_str(), &out.ptr));
    json doc = json::parse(out.str());
    bool exceeded = doc["exceeded"].get<bool>();
    if (format == "json") {
        std::cout << out.str() << "\n";
    } else {
        std::cout << "space " << doc["space"].get<std::string>() << "  bound "
                  << doc["bound"].get<std::string>() << "  max observed "
                  << doc["max_observed"].get<std::string>() << "  over "
                  << doc["instances"].get<std::string>() << " instances"
                  << (exceeded ? "  BOUND EXCEEDED" : "") << "\n";
    }
    return exceeded ? kExitFalsified : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"picking-sequence fair division toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format: json, text, or csv (verify)")
        ->capture_default_str();

    std::string instance_path, seq_text, make_kind, space = "pi", theorem, generator, mode;
    int n = 0, m = 0, agent = 0, agents = 0, samples = 0;
    long long seed = -1;

    auto* simulate = app.add_subcommand("simulate", "run a picking sequence on an instance");
    simulate->add_option("--instance", instance_path, "instance JSON file, or - for stdin")->required();
    simulate->add_option("--sequence", seq_text, "sequence text, e.g. 1,2|2,1");
    simulate->add_option("--make", make_kind, "round-robin, balanced-alternation, or last-first");

    auto* mms = app.add_subcommand("mms", "per-agent exact maximin shares");
    mms->add_option("--instance", instance_path, "instance JSON file, or - for stdin")->required();

    auto* classify = app.add_subcommand("classify", "classify one picking sequence");
    classify->add_option("sequence", seq_text, "sequence text")->required();
    classify->add_option("--agents", agents, "number of agents (default: largest id in the text)");

    auto* enumerate = app.add_subcommand("enumerate", "classify the whole of R_{n,m}");
    enumerate->add_option("--n", n, "agents")->required();
    enumerate->add_option("--m", m, "goods")->required();

    auto* generate = app.add_subcommand("generate", "emit a proof-derived adversarial instance");
    generate->add_option("name", generator,
                         "ew_zero, price_all, price_rb, mms_agent, mms_I1, mms_I2, ef1_counterexample")
        ->required();
    generate->add_option("--n", n, "agents")->required();
    generate->add_option("--m", m, "goods")->required();
    generate->add_option("--sequence", seq_text, "base sequence where required");
    generate->add_option("--agent", agent, "target agent (mms_agent)");

    auto* verify = app.add_subcommand("verify", "run theorem checks (exit 2 on falsification)");
    verify->add_option("theorem", theorem, "theorem id or 'all'")->required();
    verify->add_option("--n", n, "agents (with --m: one explicit configuration)");
    verify->add_option("--m", m, "goods");
    verify->add_option("--samples", samples, "random-mode sample count");
    verify->add_option("--seed", seed, "seed (master seed for defaults)");
    verify->add_option("--mode", mode, "exhaustive-grid or random");

    auto* price = app.add_subcommand("price", "egalitarian price search for a base sequence");
    price->add_option("--n", n, "agents")->required();
    price->add_option("--m", m, "goods")->required();
    price->add_option("--sequence", seq_text, "base sequence in R_{n,m}")->required();
    price->add_option("--space", space, "pi (all sequences) or rb (recursively balanced)");
    price->add_option("--samples", samples, "sampled instances");
    price->add_option("--seed", seed, "seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(instance_path, seq_text, make_kind, format);
        if (mms->parsed()) return cmd_mms(instance_path, format);
        if (classify->parsed()) return cmd_classify(seq_text, agents, format);
        if (enumerate->parsed()) return cmd_enumerate(n, m, format);
        if (generate->parsed()) return cmd_generate(generator, n, m, seq_text, agent, format);
        if (verify->parsed()) return cmd_verify(theorem, n, m, samples, seed, mode, format);
        if (price->parsed()) return cmd_price(n, m, seq_text, space, samples, seed, format);
    } catch (const std::exception& e) {
        die(e.what());
    }
    return kExitUsage;
}
