#include "pickseq/pickseq.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "adversary.hpp"
#include "errors.hpp"
#include "execution.hpp"
#include "instance.hpp"
#include "mms.hpp"
#include "sequence.hpp"
#include "verify.hpp"

using namespace pickseq;

struct pickseq_instance {
    Instance value;
};

struct pickseq_sequence {
    PickingSequence value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

pickseq_status set_error(pickseq_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
pickseq_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ResourceLimitError& e) {
        return set_error(PICKSEQ_ERROR_LIMIT, e.what());
    } catch (const nlohmann::json::exception& e) {
        return set_error(PICKSEQ_ERROR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error(PICKSEQ_ERROR_INTERNAL, e.what());
    }
}

SearchSpec spec_from_json(const nlohmann::json& doc) {
    SearchSpec spec;
    if (doc.contains("mode")) {
        std::string mode = doc["mode"].get<std::string>();
        if (mode == "random")
            spec.mode = SearchSpec::Mode::Random;
        else if (mode == "exhaustive-grid")
            spec.mode = SearchSpec::Mode::ExhaustiveGrid;
        else
            throw std::invalid_argument("unknown mode: " + mode);
    }
    if (doc.contains("grid")) {
        spec.utility_values.clear();
        for (const auto& v : doc["grid"]) {
            if (v.is_number_integer())
                spec.utility_values.push_back(Rational(v.get<long long>()));
            else
                spec.utility_values.push_back(parse_rational(v.get<std::string>()));
        }
    }
    if (doc.contains("samples")) spec.sample_count = doc["samples"].get<int>();
    if (doc.contains("seed")) spec.seed = doc["seed"].get<std::uint64_t>();
    return spec;
}

nlohmann::json parse_params(const char* params_json) {
    if (params_json == nullptr || *params_json == '\0') return nlohmann::json::object();
    nlohmann::json doc = nlohmann::json::parse(params_json, nullptr, true, /*ignore_comments=*/true);
    if (doc.is_null()) return nlohmann::json::object();
    if (!doc.is_object()) throw std::invalid_argument("parameters must be a JSON object");
    return doc;
}

}  // namespace

extern "C" {

const char* pickseq_version(void) { return "1.0.0"; }

const char* pickseq_last_error(void) { return g_last_error.c_str(); }

void pickseq_string_free(char* text) { delete[] text; }

pickseq_status pickseq_instance_parse(const char* json_text, pickseq_instance** out) {
    if (!json_text || !out) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new pickseq_instance{instance_from_json(json_text)};
        return PICKSEQ_OK;
    });
}

void pickseq_instance_free(pickseq_instance* inst) { delete inst; }

pickseq_status pickseq_instance_to_json(const pickseq_instance* inst, char** out_json) {
    if (!inst || !out_json) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_json = dup_string(instance_to_json(inst->value, 2));
        return PICKSEQ_OK;
    });
}

int pickseq_instance_agents(const pickseq_instance* inst) { return inst ? inst->value.n : 0; }

int pickseq_instance_goods(const pickseq_instance* inst) { return inst ? inst->value.m : 0; }

pickseq_status pickseq_sequence_parse(const char* text, int agents, pickseq_sequence** out) {
    if (!text || !out) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new pickseq_sequence{parse_sequence(text, agents)};
        return PICKSEQ_OK;
    });
}

pickseq_status pickseq_sequence_make(const char* kind, int agents, int goods, pickseq_sequence** out) {
    if (!kind || !out) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::string name = kind;
        PickingSequence seq;
        if (name == "round-robin")
            seq = make_round_robin(agents, goods);
        else if (name == "balanced-alternation")
            seq = make_balanced_alternation(agents, goods);
        else if (name == "last-first")
            seq = make_last_first(agents, goods);
        else
            throw std::invalid_argument("unknown sequence kind: " + name);
        *out = new pickseq_sequence{std::move(seq)};
        return PICKSEQ_OK;
    });
}

void pickseq_sequence_free(pickseq_sequence* seq) { delete seq; }

pickseq_status pickseq_sequence_format(const pickseq_sequence* seq, char** out_text) {
    if (!seq || !out_text) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_text = dup_string(format_sequence(seq->value));
        return PICKSEQ_OK;
    });
}

int pickseq_sequence_agents(const pickseq_sequence* seq) { return seq ? seq->value.n : 0; }

int pickseq_sequence_length(const pickseq_sequence* seq) { return seq ? seq->value.m() : 0; }

int pickseq_sequence_recursively_balanced(const pickseq_sequence* seq) {
    return seq && is_recursively_balanced(seq->value) ? 1 : 0;
}

pickseq_status pickseq_simulate(const pickseq_instance* inst, const pickseq_sequence* seq,
                                char** out_json) {
    if (!inst || !seq || !out_json) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        Allocation alloc = execute(inst->value, seq->value);
        WelfareReport welfare = egalitarian_welfare(inst->value, alloc);
        Ef1Result ef1 = is_ef1(inst->value, alloc);
        nlohmann::json doc;
        doc["sequence"] = format_sequence(seq->value);
        doc["allocation"] = nlohmann::json::parse(allocation_to_json(alloc));
        doc["welfare"] = nlohmann::json::parse(welfare_to_json(welfare));
        doc["ef1"] = {{"satisfied", ef1.satisfied}};
        if (!ef1.satisfied) {
            doc["ef1"]["envier"] = ef1.envier;
            doc["ef1"]["envied"] = ef1.envied;
        }
        *out_json = dup_string(doc.dump(2));
        return PICKSEQ_OK;
    });
}

pickseq_status pickseq_mms(const pickseq_instance* inst, char** out_json) {
    if (!inst || !out_json) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        nlohmann::json agents = nlohmann::json::array();
        for (int i = 1; i <= inst->value.n; ++i) {
            MmsResult result = mms_exact(inst->value, i);
            agents.push_back({{"agent", i},
                              {"mms", rational_str(result.value)},
                              {"witness", result.witness}});
        }
        nlohmann::json doc;
        doc["n"] = inst->value.n;
        doc["m"] = inst->value.m;
        doc["agents"] = std::move(agents);
        *out_json = dup_string(doc.dump(2));
        return PICKSEQ_OK;
    });
}

pickseq_status pickseq_classify(const pickseq_sequence* seq, char** out_json) {
    if (!seq || !out_json) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_json = dup_string(report_to_json(classify(seq->value), 2));
        return PICKSEQ_OK;
    });
}

pickseq_status pickseq_census(int agents, int goods, char** out_json) {
    if (!out_json) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_json = dup_string(census_to_json(census(agents, goods), 2));
        return PICKSEQ_OK;
    });
}

pickseq_status pickseq_generate(const char* generator, const char* params_json, char** out_json) {
    if (!generator || !out_json) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        nlohmann::json params = parse_params(params_json);
        std::string name = generator;
        int n = params.value("n", 0);
        int m = params.value("m", 0);
        auto sequence_param = [&]() -> PickingSequence {
            if (!params.contains("sequence"))
                throw std::invalid_argument("generator " + name + " needs a \"sequence\" parameter");
            return parse_sequence(params["sequence"].get<std::string>(), n);
        };
        GeneratedInstance gen;
        if (name == "ew_zero")
            gen = gen_ew_zero(n, m, sequence_param());
        else if (name == "price_all")
            gen = gen_price_all(n, m, sequence_param());
        else if (name == "price_rb")
            gen = gen_price_rb(n, m, sequence_param());
        else if (name == "mms_agent")
            gen = gen_mms_agent(n, m, sequence_param(), params.value("agent", 0));
        else if (name == "mms_I1")
            gen = gen_mms_I1(n, m);
        else if (name == "mms_I2")
            gen = gen_mms_I2(n, m);
        else if (name == "ef1_counterexample")
            gen = gen_ef1_counterexample(sequence_param());
        else
            throw std::invalid_argument("unknown generator: " + name);
        *out_json = dup_string(generated_to_json(gen, 2));
        return PICKSEQ_OK;
    });
}

pickseq_status pickseq_verify(const char* theorem, const char* params_json, int* out_pass,
                              char** out_json) {
    if (!theorem || !out_pass || !out_json)
        return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        nlohmann::json params = parse_params(params_json);
        std::uint64_t master_seed = params.value("seed", 1);
        std::vector<TheoremCheck> checks;
        std::string name = theorem;
        if (name == "all") {
            checks = run_default_suite(master_seed);
        } else {
            auto id = theorem_from_name(name);
            if (!id) throw std::invalid_argument("unknown theorem id: " + name);
            if (params.contains("n") && params.contains("m")) {
                SearchSpec spec = spec_from_json(params);
                checks.push_back(check(*id, params["n"].get<int>(), params["m"].get<int>(), spec));
            } else {
                checks = run_default(*id, master_seed);
            }
        }
        bool pass = true;
        nlohmann::json list = nlohmann::json::array();
        for (const TheoremCheck& c : checks) {
            pass = pass && c.pass;
            list.push_back(nlohmann::json::parse(check_to_json(c)));
        }
        nlohmann::json doc;
        doc["pass"] = pass;
        doc["checks"] = std::move(list);
        *out_pass = pass ? 1 : 0;
        *out_json = dup_string(doc.dump(2));
        return PICKSEQ_OK;
    });
}

pickseq_status pickseq_theorems(char** out_json) {
    if (!out_json) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        nlohmann::json list = nlohmann::json::array();
        for (TheoremId id : all_theorems()) list.push_back(theorem_name(id));
        *out_json = dup_string(list.dump());
        return PICKSEQ_OK;
    });
}

pickseq_status pickseq_price_search(const char* params_json, char** out_json) {
    if (!out_json) return set_error(PICKSEQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        nlohmann::json params = parse_params(params_json);
        int n = params.at("n").get<int>();
        int m = params.at("m").get<int>();
        PickingSequence base = parse_sequence(params.at("sequence").get<std::string>(), n);
        std::string space_name = params.value("space", "pi");
        SequenceSpace space;
        if (space_name == "pi")
            space = SequenceSpace::All;
        else if (space_name == "rb")
            space = SequenceSpace::Balanced;
        else
            throw std::invalid_argument("space must be \"pi\" or \"rb\"");
        SearchSpec spec = spec_from_json(params);
        if (!params.contains("mode")) spec.mode = SearchSpec::Mode::Random;
        *out_json = dup_string(price_search_to_json(price_search(n, m, base, space, spec), 2));
        return PICKSEQ_OK;
    });
}

}  // extern "C"
