#include "braidmono/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "braidmono/errors.hpp"

namespace braidmono {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw ValidationError("JSON input: " + what);
}

long long get_integer(const Json& j, const char* key, const char* where) {
    if (!j.contains(key) || !j[key].is_number_integer())
        bad(std::string(where) + ": \"" + key + "\" must be an integer");
    return j[key].get<long long>();
}

int get_int(const Json& j, const char* key, const char* where) {
    return static_cast<int>(get_integer(j, key, where));
}

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array())
        bad(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const Json& v : j) {
        if (!v.is_number_integer())
            bad(std::string(what) + " must contain only integers");
        out.push_back(v.get<int>());
    }
    return out;
}

long long parse_integer(const std::string& text, const char* what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        bad(std::string(what) + ": \"" + text + "\" is not an integer");
    }
    if (used != text.size())
        bad(std::string(what) + ": \"" + text + "\" is not an integer");
    return v;
}

} // namespace

Json braid_to_json(const BraidWord& b) {
    Json j;
    j["strands"] = b.strands();
    j["letters"] = b.letters();
    return j;
}

BraidWord braid_from_text(const std::string& text, int strands) {
    std::vector<int> letters;
    std::istringstream in(text);
    std::string token;
    std::vector<std::string> tokens;
    while (in >> token)
        tokens.push_back(token);
    if (tokens.size() == 1 && tokens[0] == "1")
        return BraidWord::identity(strands);
    for (const std::string& t : tokens) {
        if (t.size() < 2 || t[0] != 's')
            bad("braid text token \"" + t + "\" (expected sN or sN^E)");
        const std::size_t caret = t.find('^');
        const long long index =
            parse_integer(t.substr(1, caret == std::string::npos
                                          ? std::string::npos
                                          : caret - 1),
                          "braid text generator index");
        long long exponent = 1;
        if (caret != std::string::npos)
            exponent = parse_integer(t.substr(caret + 1), "braid text exponent");
        if (index < 1)
            bad("braid text generator index must be positive");
        for (long long c = 0; c < std::llabs(exponent); ++c)
            letters.push_back(static_cast<int>(exponent < 0 ? -index : index));
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord braid_from_json(const Json& j, int strands_hint) {
    if (j.is_string()) {
        if (strands_hint <= 0)
            bad("text-form braid needs a strand count from context");
        return braid_from_text(j.get<std::string>(), strands_hint);
    }
    if (!j.is_object())
        bad("a braid must be an object or a text string");
    const int strands = get_int(j, "strands", "braid");
    if (!j.contains("letters"))
        bad("braid: missing \"letters\"");
    return BraidWord(strands, int_array(j["letters"], "braid \"letters\""));
}

Json factorization_to_json(const Factorization& f) {
    Json j;
    j["strands"] = f.strands();
    j["marked"] = f.marked();
    Json entries = Json::array();
    for (const BraidWord& b : f.entries())
        entries.push_back(b.str());
    j["entries"] = std::move(entries);
    Json labels = Json::array();
    for (const std::string& l : f.labels()) {
        if (l.empty())
            labels.push_back(nullptr);
        else
            labels.push_back(l);
    }
    j["labels"] = std::move(labels);
    return j;
}

Factorization factorization_from_json(const Json& j) {
    if (!j.is_object())
        bad("a factorization must be an object");
    const int strands = get_int(j, "strands", "factorization");
    if (!j.contains("marked") || !j["marked"].is_boolean())
        bad("factorization: \"marked\" must be a boolean");
    if (!j.contains("entries") || !j["entries"].is_array())
        bad("factorization: \"entries\" must be an array");
    std::vector<BraidWord> entries;
    for (const Json& e : j["entries"])
        entries.push_back(braid_from_json(e, strands));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != entries.size())
            bad("factorization: \"labels\" must be an array matching \"entries\"");
        for (const Json& l : j["labels"]) {
            if (l.is_null())
                labels.emplace_back();
            else if (l.is_string())
                labels.push_back(l.get<std::string>());
            else
                bad("factorization: labels must be strings or null");
        }
    }
    return Factorization(strands, j["marked"].get<bool>(), std::move(entries),
                         std::move(labels));
}

Json presentation_to_json(const GroupPresentation& p) {
    Json j;
    j["generators"] = p.generators;
    Json relators = Json::array();
    for (const FreeWord& r : p.relators)
        relators.push_back(r.letters());
    j["relators"] = std::move(relators);
    return j;
}

GroupPresentation presentation_from_json(const Json& j) {
    if (!j.is_object())
        bad("a presentation must be an object");
    if (!j.contains("generators") || !j["generators"].is_array())
        bad("presentation: \"generators\" must be an array of names");
    GroupPresentation p;
    for (const Json& g : j["generators"]) {
        if (!g.is_string())
            bad("presentation: generator names must be strings");
        p.generators.push_back(g.get<std::string>());
    }
    if (!j.contains("relators") || !j["relators"].is_array())
        bad("presentation: \"relators\" must be an array of letter arrays");
    const int rank = static_cast<int>(p.generators.size());
    for (const Json& r : j["relators"]) {
        std::vector<int> letters = int_array(r, "presentation relator");
        for (int v : letters)
            if (v == 0 || std::abs(v) > rank)
                bad("presentation relator letter out of range");
        p.relators.emplace_back(rank, letters);
    }
    return p;
}

Json local_point_to_json(const LocalPointData& d) {
    Json j;
    j["type"] = d.point_type;
    j["milnor"] = d.milnor;
    Json branches = Json::array();
    for (const LocalBranch& b : d.branches) {
        Json jb;
        jb["milnor"] = b.milnor;
        jb["axis_mult_1"] = b.axis_mult_1;
        if (b.axis_mult_2)
            jb["axis_mult_2"] = *b.axis_mult_2;
        jb["components"] = b.components;
        branches.push_back(std::move(jb));
    }
    j["branches"] = std::move(branches);
    j["pairwise_intersections"] = d.pairwise_intersections;
    return j;
}

LocalPointData local_point_from_json(const Json& j) {
    if (!j.is_object())
        bad("local point data must be an object");
    LocalPointData d;
    d.point_type = get_int(j, "type", "local point");
    d.milnor = get_integer(j, "milnor", "local point");
    if (!j.contains("branches") || !j["branches"].is_array())
        bad("local point: \"branches\" must be an array");
    for (const Json& jb : j["branches"]) {
        LocalBranch b;
        b.milnor = get_integer(jb, "milnor", "branch");
        b.axis_mult_1 = get_integer(jb, "axis_mult_1", "branch");
        if (jb.contains("axis_mult_2")) {
            if (!jb["axis_mult_2"].is_number_integer())
                bad("branch: \"axis_mult_2\" must be an integer");
            b.axis_mult_2 = jb["axis_mult_2"].get<long long>();
        }
        if (jb.contains("components"))
            b.components = get_integer(jb, "components", "branch");
        d.branches.push_back(std::move(b));
    }
    if (j.contains("pairwise_intersections")) {
        if (!j["pairwise_intersections"].is_array())
            bad("local point: \"pairwise_intersections\" must be an array");
        for (const Json& v : j["pairwise_intersections"]) {
            if (!v.is_number_integer())
                bad("pairwise intersections must be integers");
            d.pairwise_intersections.push_back(v.get<long long>());
        }
    }
    return d;
}

std::string rational_to_text(const Rational& r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_text(const std::string& text) {
    const std::size_t slash = text.find('/');
    const long long num =
        parse_integer(text.substr(0, slash), "rational numerator");
    long long den = 1;
    if (slash != std::string::npos)
        den = parse_integer(text.substr(slash + 1), "rational denominator");
    if (den == 0)
        bad("rational denominator must be nonzero");
    return Rational(num, den);
}

std::vector<GenericFiberEntry> fiber_rows_from_json(const Json& j, int strands) {
    if (!j.is_array())
        bad("fiber data must be an array of rows");
    std::vector<GenericFiberEntry> rows;
    for (const Json& jr : j) {
        if (!jr.is_object() || !jr.contains("conjugator") || !jr.contains("local") ||
            !jr.contains("indices"))
            bad("fiber row needs \"conjugator\", \"local\" and \"indices\"");
        GenericFiberEntry row{braid_from_json(jr["conjugator"], strands),
                              braid_from_json(jr["local"], strands),
                              int_array(jr["indices"], "fiber row \"indices\"")};
        rows.push_back(std::move(row));
    }
    return rows;
}

ArrangementInput arrangement_from_json(const Json& j) {
    if (!j.is_object())
        bad("arrangement input must be an object");
    ArrangementInput input;
    input.lines = get_int(j, "lines", "arrangement");
    if (!j.contains("entries") || !j["entries"].is_array())
        bad("arrangement: \"entries\" must be an array");
    for (const Json& je : j["entries"]) {
        if (!je.is_object() || !je.contains("tau") || !je.contains("beta") ||
            !je.contains("cuts"))
            bad("arrangement entry needs \"tau\", \"beta\" and \"cuts\"");
        ArrangementEntry e{braid_from_json(je["tau"], input.lines),
                           braid_from_json(je["beta"], input.lines),
                           int_array(je["cuts"], "arrangement \"cuts\""), ""};
        if (je.contains("label")) {
            if (!je["label"].is_string())
                bad("arrangement entry label must be a string");
            e.label = je["label"].get<std::string>();
        }
        input.entries.push_back(std::move(e));
    }
    if (j.contains("vertical_indices"))
        input.vertical_indices =
            int_array(j["vertical_indices"], "arrangement \"vertical_indices\"");
    return input;
}

TangencyModel tangency_model_from_json(const std::string& rule, const Json& j,
                                       int strands) {
    if (!j.is_object())
        bad("tangency data must be an object");
    const int base = get_int(j, "base", "tangency");
    BraidWord conjugator = BraidWord::identity(strands);
    if (j.contains("conjugator"))
        conjugator = braid_from_json(j["conjugator"], strands);
    if (rule == "cusp") {
        const bool mirror = j.contains("mirror") && j["mirror"].is_boolean() &&
                            j["mirror"].get<bool>();
        return mirror ? TangencyModel::cusp_mirror(base, std::move(conjugator))
                      : TangencyModel::cusp(base, std::move(conjugator));
    }
    if (rule == "node")
        return TangencyModel::node_branch(base, std::move(conjugator));
    if (rule == "inflection")
        return TangencyModel::inflection(get_int(j, "order", "tangency"), base,
                                         std::move(conjugator));
    bad("unknown tangency rule \"" + rule + "\"");
}

std::string dump_canonical(const Json& j) {
    return j.dump(2) + "\n";
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot write " + path);
    out << dump_canonical(j);
    if (!out)
        throw ValidationError("cannot write " + path);
}

} // namespace braidmono
