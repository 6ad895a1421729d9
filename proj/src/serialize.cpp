#include "parakat/serialize.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace parakat {

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

namespace {

/// Renders entries with ';' at every carrel boundary.
std::string carrel_text(const RSubset& r, const std::vector<int>& v) {
    std::string out = "(";
    for (int i = 1; i <= static_cast<int>(v.size()); ++i) {
        if (i > 1)
            out += r.contains(i - 1) ? ';' : ',';
        out += std::to_string(v[static_cast<std::size_t>(i - 1)]);
    }
    return out + ")";
}

std::string csv_list(const std::vector<int>& v) { return join_ints(v, ' '); }

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        fail(ErrorCode::InvalidArgument, std::string("malformed ") + what + " JSON: " + e.what());
    }
}

RSubset rsubset_from(const Json& j) {
    return RSubset(j.at("n").get<int>(), j.contains("R") ? j.at("R").get<std::vector<int>>() : std::vector<int>{});
}

} // namespace

// ------------------------------------------------------------------- text

std::string to_text(const RSubset& r) { return "{" + join_ints(r.dividers()) + "}"; }
std::string to_text(const RTuple& t) { return carrel_text(t.rsubset(), t.entries()); }
std::string to_text(const RPermutation& p) { return carrel_text(p.rsubset(), p.one_line()); }

std::string to_text(const CriticalList& c) {
    std::string out = "(";
    for (std::size_t h = 0; h < c.carrels().size(); ++h) {
        if (h)
            out += ';';
        out += '{';
        for (std::size_t u = 0; u < c.carrels()[h].size(); ++u) {
            const auto& p = c.carrels()[h][u];
            if (u)
                out += ',';
            out += "(" + std::to_string(p.index) + "," + std::to_string(p.entry) + ")";
        }
        out += '}';
    }
    return out + ")";
}

std::string to_text(const RChain& b) {
    std::string out = "(";
    for (std::size_t h = 0; h < b.sets().size(); ++h) {
        if (h)
            out += ';';
        out += "{" + join_ints(b.sets()[h]) + "}";
    }
    return out + ")";
}

std::string to_text(const Shape& s) { return "(" + join_ints(s.parts()) + ")"; }

std::string to_text(const Tableau& t) {
    std::string out = "(";
    for (std::size_t j = 0; j < t.columns().size(); ++j) {
        if (j)
            out += '|';
        out += join_ints(t.columns()[j]);
    }
    return out + ")";
}

namespace {

const std::pair<const char*, bool Classification::*> kFlags[] = {
    {"upper", &Classification::upper},
    {"flag", &Classification::flag},
    {"r_increasing", &Classification::r_increasing},
    {"gapless", &Classification::gapless},
    {"gapless_core", &Classification::gapless_core},
    {"shell", &Classification::shell},
    {"canopy", &Classification::canopy},
    {"floor_flag", &Classification::floor_flag},
    {"ceiling_flag", &Classification::ceiling_flag},
};

} // namespace

std::string to_text(const Classification& c) {
    std::string out;
    for (const auto& [name, member] : kFlags)
        out += std::string(name) + ": " + (c.*member ? "true" : "false") + "\n";
    return out;
}

// ------------------------------------------------------------------- JSON

Json to_json(const RTuple& t) {
    return Json{{"n", t.n()}, {"R", t.rsubset().dividers()}, {"entries", t.entries()}};
}

Json to_json(const RPermutation& p) {
    return Json{{"n", p.n()}, {"R", p.rsubset().dividers()}, {"one_line", p.one_line()}};
}

Json to_json(const CriticalList& c) {
    Json carrels = Json::array();
    for (const auto& carrel : c.carrels()) {
        Json pairs = Json::array();
        for (const auto& p : carrel)
            pairs.push_back(Json::array({p.index, p.entry}));
        carrels.push_back(std::move(pairs));
    }
    return Json{{"n", c.rsubset().n()}, {"R", c.rsubset().dividers()}, {"carrels", std::move(carrels)}};
}

Json to_json(const RChain& b) { return Json(b.sets()); }

Json to_json(const Shape& s) { return Json(s.parts()); }

Json to_json(const Tableau& t) {
    return Json{{"lambda", t.shape().parts()}, {"n", t.shape().n()}, {"columns", t.columns()}};
}

Json to_json(const TableauSet& s) {
    Json arr = Json::array();
    for (const auto& t : s.members())
        arr.push_back(to_json(t));
    return arr;
}

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exp", e}, {"coef", c}});
    return Json{{"n", p.n()}, {"terms", std::move(terms)}};
}

Json to_json(const Classification& c) {
    Json j = Json::object();
    for (const auto& [name, member] : kFlags)
        j[name] = c.*member;
    return j;
}

RTuple tuple_from_json(const Json& j) {
    return guarded("tuple", [&] { return RTuple(rsubset_from(j), j.at("entries").get<std::vector<int>>()); });
}

RPermutation perm_from_json(const Json& j) {
    return guarded("permutation",
                   [&] { return RPermutation(rsubset_from(j), j.at("one_line").get<std::vector<int>>()); });
}

CriticalList critlist_from_json(const Json& j) {
    return guarded("critical list", [&] {
        std::vector<std::vector<CriticalPair>> carrels;
        for (const auto& carrel : j.at("carrels")) {
            std::vector<CriticalPair> pairs;
            for (const auto& p : carrel)
                pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
            carrels.push_back(std::move(pairs));
        }
        return CriticalList(rsubset_from(j), std::move(carrels));
    });
}

Tableau tableau_from_json(const Json& j) {
    return guarded("tableau", [&] {
        Shape shape(j.at("lambda").get<std::vector<int>>());
        if (j.contains("n"))
            require(j.at("n").get<int>() == shape.n(), ErrorCode::InvalidArgument,
                    "tableau n disagrees with lambda");
        return Tableau(shape, j.at("columns").get<std::vector<std::vector<int>>>());
    });
}

Polynomial poly_from_json(const Json& j) {
    return guarded("polynomial", [&] {
        Polynomial p(j.at("n").get<int>());
        for (const auto& term : j.at("terms"))
            p.add(term.at("exp").get<std::vector<int>>(), term.at("coef").get<std::int64_t>());
        return p;
    });
}

// -------------------------------------------------------------------- CSV

std::string to_csv(const RTuple& t) {
    return "n,R,entries\n" + std::to_string(t.n()) + "," + csv_list(t.rsubset().dividers()) + "," +
           csv_list(t.entries()) + "\n";
}

std::string to_csv(const RPermutation& p) {
    return "n,R,one_line\n" + std::to_string(p.n()) + "," + csv_list(p.rsubset().dividers()) + "," +
           csv_list(p.one_line()) + "\n";
}

std::string to_csv(const CriticalList& c) {
    std::string out = "carrel,index,entry\n";
    for (std::size_t h = 0; h < c.carrels().size(); ++h)
        for (const auto& p : c.carrels()[h])
            out += std::to_string(h + 1) + "," + std::to_string(p.index) + "," + std::to_string(p.entry) + "\n";
    return out;
}

namespace {

std::string csv_columns(const Tableau& t) {
    std::string out;
    for (std::size_t j = 0; j < t.columns().size(); ++j) {
        if (j)
            out += '|';
        out += csv_list(t.columns()[j]);
    }
    return out;
}

} // namespace

std::string to_csv(const Tableau& t) {
    return "lambda,columns\n" + csv_list(t.shape().parts()) + "," + csv_columns(t) + "\n";
}

std::string to_csv(const TableauSet& s) {
    std::string out = "lambda,columns\n";
    for (const auto& t : s.members())
        out += csv_list(t.shape().parts()) + "," + csv_columns(t) + "\n";
    return out;
}

std::string to_csv(const Polynomial& p) {
    std::string out = "exp,coef\n";
    for (const auto& [e, c] : p.terms())
        out += csv_list(e) + "," + std::to_string(c) + "\n";
    return out;
}

std::string to_csv(const Classification& c) {
    std::string head, row;
    for (const auto& [name, member] : kFlags) {
        if (!head.empty()) {
            head += ',';
            row += ',';
        }
        head += name;
        row += c.*member ? "true" : "false";
    }
    return head + "\n" + row + "\n";
}

// ---------------------------------------------------------------- parsing

std::vector<int> parse_int_list(std::string_view text, std::vector<int>* dividers) {
    std::vector<int> out;
    std::size_t i = 0;
    bool expect_value = true;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
            require(expect_value, ErrorCode::InvalidArgument, "missing separator in list");
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            int value = 0;
            const auto [end, ec] = std::from_chars(text.data() + i, text.data() + j, value);
            require(ec == std::errc() && end == text.data() + j, ErrorCode::InvalidArgument,
                    "bad integer in list");
            out.push_back(value);
            expect_value = false;
            i = j;
            continue;
        }
        if (ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) {
            if (ch == ';' && dividers)
                dividers->push_back(static_cast<int>(out.size()));
            expect_value = true;
        } else {
            require(ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == '{' || ch == '}',
                    ErrorCode::InvalidArgument,
                    std::string("unexpected character '") + ch + "' in list");
        }
        ++i;
    }
    return out;
}

} // namespace parakat
