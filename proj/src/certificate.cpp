#include <algorithm>
#include <cctype>
#include <future>
#include <map>
#include <sstream>

#include "lscat/category_engine.hpp"
#include "lscat/cohomology_ring.hpp"
#include "lscat/error.hpp"

namespace lscat {

namespace {

constexpr std::pair<Rule, const char*> kRuleNames[] = {
    {Rule::R1, "R1"},         {Rule::R2, "R2"},       {Rule::R3, "R3"},
    {Rule::R4, "R4"},         {Rule::R5, "R5"},       {Rule::COVER, "COVER"},
    {Rule::THEOREM, "THEOREM"}, {Rule::DIM, "DIM"},   {Rule::PUSHOUT, "PUSHOUT"},
    {Rule::PRODUCT, "PRODUCT"}, {Rule::SPHERE, "SPHERE"},
};

constexpr std::pair<PremiseKind, const char*> kKindNames[] = {
    {PremiseKind::Product, "product"},
    {PremiseKind::TopClass, "top-class"},
    {PremiseKind::CrossProduct, "cross-product"},
    {PremiseKind::TensorProduct, "tensor-product"},
    {PremiseKind::CupLength, "cuplength"},
};

std::string kind_name(PremiseKind k) {
    for (auto [kind, name] : kKindNames) {
        if (kind == k) return name;
    }
    return "?";
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? '\'' : c;
    return out + "\"";
}

void write_node(std::ostream& out, const CertNode& n, int depth) {
    out << std::string(static_cast<std::size_t>(2 * depth), ' ') << rule_name(n.rule) << " bound=" << n.bound
        << " premise=" << (n.premise == PremiseTag::Verified ? "Verified" : "CatalogFact") << " ref=" << quoted(n.ref);
    if (!n.uses.empty()) out << " uses=" << n.uses;
    out << '\n';
    for (const auto& c : n.children) write_node(out, c, depth + 1);
}

}  // namespace

std::string rule_name(Rule r) {
    for (auto [rule, name] : kRuleNames) {
        if (rule == r) return name;
    }
    return "?";
}

std::string Certificate::to_text() const {
    std::ostringstream out;
    out << "certificate 1\n";
    out << "subject: " << subject << '\n';
    if (value) {
        out << "value: " << *value << '\n';
    } else {
        out << "interval: [" << lo << ", " << hi << "]\n";
    }
    out << "upper:\n";
    write_node(out, upper, 1);
    out << "lower:\n";
    write_node(out, lower, 1);
    out << "premises:\n";
    for (const auto& p : premises) {
        out << "  " << p.id << ' ' << kind_name(p.kind) << " space=" << quoted(p.space) << " coeffs=" << p.coeffs;
        if (!p.factors.empty()) {
            out << " factors=";
            for (std::size_t i = 0; i < p.factors.size(); ++i) out << (i ? "," : "") << p.factors[i];
        }
        if (p.kind == PremiseKind::CupLength) out << " value=" << p.value;
        out << '\n';
    }
    out << "notes:\n";
    for (const auto& n : notes) out << "  - " << n << '\n';
    out << "end\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Line {
    std::size_t offset;
    int indent;
    std::string text;
};

// `bare` leading tokens, then key=value fields; values may be double-quoted.
std::map<std::string, std::string> fields(const std::string& text, std::size_t offset, std::vector<std::string>& head,
                                          int bare) {
    std::map<std::string, std::string> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    head.clear();
    for (int b = 0; b < bare; ++b) {
        skip();
        const std::size_t h = i;
        while (i < text.size() && text[i] != ' ') ++i;
        head.push_back(text.substr(h, i - h));
    }
    for (;;) {
        skip();
        if (i >= text.size()) break;
        const std::size_t k = i;
        while (i < text.size() && text[i] != '=' && text[i] != ' ') ++i;
        if (i >= text.size() || text[i] != '=') throw ParseError(offset + k, "expected key=value");
        std::string key = text.substr(k, i - k);
        ++i;
        std::string value;
        if (i < text.size() && text[i] == '"') {
            const std::size_t close = text.find('"', i + 1);
            if (close == std::string::npos) throw ParseError(offset + i, "unterminated string");
            value = text.substr(i + 1, close - i - 1);
            i = close + 1;
        } else {
            const std::size_t v = i;
            while (i < text.size() && text[i] != ' ') ++i;
            value = text.substr(v, i - v);
        }
        if (!out.emplace(key, value).second) throw ParseError(offset + k, "duplicate field '" + key + "'");
    }
    return out;
}

int to_int(const std::string& s, std::size_t offset) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError(offset, "expected a non-negative integer, got '" + s + "'");
    }
    return std::stoi(s);
}

CertNode parse_node(const std::vector<Line>& lines, std::size_t& i, int depth) {
    const Line& l = lines[i];
    if (l.indent != 2 * depth) throw ParseError(l.offset, "unexpected indentation");
    std::vector<std::string> heads;
    auto f = fields(l.text, l.offset, heads, 1);
    const std::string& head = heads[0];
    CertNode n;
    bool known = false;
    for (auto [rule, name] : kRuleNames) {
        if (head == name) {
            n.rule = rule;
            known = true;
        }
    }
    if (!known) throw ParseError(l.offset + l.indent, "unknown rule '" + head + "'");
    if (!f.count("bound") || !f.count("premise") || !f.count("ref")) {
        throw ParseError(l.offset, "node needs bound, premise and ref");
    }
    n.bound = to_int(f["bound"], l.offset);
    if (f["premise"] == "Verified") {
        n.premise = PremiseTag::Verified;
    } else if (f["premise"] == "CatalogFact") {
        n.premise = PremiseTag::CatalogFact;
    } else {
        throw ParseError(l.offset, "premise must be Verified or CatalogFact");
    }
    n.ref = f["ref"];
    if (f.count("uses")) n.uses = f["uses"];
    for (const auto& [k, v] : f) {
        if (k != "bound" && k != "premise" && k != "ref" && k != "uses") throw ParseError(l.offset, "unknown field '" + k + "'");
    }
    ++i;
    while (i < lines.size() && lines[i].indent > 2 * depth) n.children.push_back(parse_node(lines, i, depth + 1));
    return n;
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
    std::vector<Line> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string s(text.substr(pos, nl - pos));
        if (!s.empty() && s.back() == '\r') s.pop_back();
        int indent = 0;
        while (static_cast<std::size_t>(indent) < s.size() && s[indent] == ' ') ++indent;
        if (static_cast<std::size_t>(indent) < s.size()) lines.push_back({pos, indent, s});
        pos = nl + 1;
    }
    Certificate c;
    std::size_t i = 0;
    auto need = [&](const std::string& prefix) -> std::string {
        if (i >= lines.size()) throw ParseError(text.size(), "expected '" + prefix + "'");
        const Line& l = lines[i];
        if (l.indent != 0 || l.text.rfind(prefix, 0) != 0) throw ParseError(l.offset, "expected '" + prefix + "'");
        ++i;
        return l.text.substr(prefix.size());
    };
    if (need("certificate ") != "1") throw ParseError(0, "unsupported certificate version");
    c.subject = need("subject: ");
    if (i < lines.size() && lines[i].text.rfind("value: ", 0) == 0) {
        const std::size_t off = lines[i].offset;
        c.value = to_int(need("value: "), off);
        c.lo = c.hi = *c.value;
    } else {
        const std::size_t off = i < lines.size() ? lines[i].offset : text.size();
        std::string iv = need("interval: ");
        int a = 0, b = 0;
        char l = 0, comma = 0, r = 0;
        std::istringstream in(iv);
        if (!(in >> l >> a >> comma >> b >> r) || l != '[' || comma != ',' || r != ']') {
            throw ParseError(off, "expected interval: [lo, hi]");
        }
        c.lo = a;
        c.hi = b;
    }
    auto tree = [&](const std::string& section) {
        need(section);
        if (i >= lines.size() || lines[i].indent != 2) throw ParseError(i < lines.size() ? lines[i].offset : text.size(), "expected a rule node");
        CertNode n = parse_node(lines, i, 1);
        if (i < lines.size() && lines[i].indent != 0) throw ParseError(lines[i].offset, "more than one root node");
        return n;
    };
    c.upper = tree("upper:");
    c.lower = tree("lower:");
    need("premises:");
    while (i < lines.size() && lines[i].indent > 0) {
        const Line& l = lines[i++];
        std::vector<std::string> heads;
        auto rest = fields(l.text, l.offset, heads, 2);
        Premise p;
        p.id = heads[0];
        const std::string& kind = heads[1];
        if (p.id.size() < 2 || p.id[0] != 'P') throw ParseError(l.offset + l.indent, "expected a premise id like P1");
        bool known = false;
        for (auto [k, name] : kKindNames) {
            if (kind == name) {
                p.kind = k;
                known = true;
            }
        }
        if (!known) throw ParseError(l.offset, "unknown premise kind '" + kind + "'");
        if (!rest.count("space") || !rest.count("coeffs")) throw ParseError(l.offset, "premise needs space and coeffs");
        p.space = rest["space"];
        p.coeffs = static_cast<std::uint32_t>(to_int(rest["coeffs"], l.offset));
        if (rest.count("factors")) {
            std::string item;
            std::istringstream fs(rest["factors"]);
            while (std::getline(fs, item, ',')) p.factors.push_back(item);
        }
        if (rest.count("value")) p.value = to_int(rest["value"], l.offset);
        c.premises.push_back(std::move(p));
    }
    need("notes:");
    while (i < lines.size() && lines[i].indent > 0) {
        std::string t = lines[i++].text.substr(2);
        if (t.rfind("- ", 0) == 0) t = t.substr(2);
        c.notes.push_back(t);
    }
    need("end");
    if (i != lines.size()) throw ParseError(lines[i].offset, "content after 'end'");
    return c;
}

// ---------------------------------------------------------------------------
// Premises

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

DeltaComplex resolve_complex(const std::string& space) {
    if (space.rfind("file:", 0) == 0) return read_dcx_file(space.substr(5));
    if (ends_with(space, " x S1")) return product(resolve_complex(space.substr(0, space.size() - 5)), gen::circle());
    if (space.find(" (x) S") != std::string::npos) {
        throw Error(ErrorCode::InvalidArgument, "'" + space + "' is a tensor ring, not a complex");
    }
    return triangulate_expr(normalize(parse_expr(space)));
}

// Splits "M (x) S<n>" into M and n.
std::optional<std::pair<std::string, int>> tensor_split(const std::string& space) {
    const auto at = space.rfind(" (x) S");
    if (at == std::string::npos) return std::nullopt;
    const std::string n = space.substr(at + 6);
    if (n.empty() || n.size() > 3 || !std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorCode::InvalidArgument, "bad sphere in '" + space + "'");
    }
    return std::pair{space.substr(0, at), std::stoi(n)};
}

CohomologyRing ring_for(const std::string& space, std::uint32_t p) {
    if (auto t = tensor_split(space)) return kunneth_tensor(ring_for(t->first, p), sphere_ring(t->second, p));
    return ring_table(resolve_complex(space), p);
}

std::optional<RingElement> find_label(const CohomologyRing& ring, const std::string& label) {
    for (int k = 1; k <= ring.top_degree(); ++k) {
        for (Index i = 0; i < ring.dimension(k); ++i) {
            if (ring.label(k, i) == label) return ring.basis(k, i);
        }
    }
    return std::nullopt;
}

// Indicator of top simplex 0; pairs to +-1 with the fundamental class when it exists.
ModVector top_indicator(const DeltaComplex& x) {
    ModVector u(x.count(x.dim()), 0);
    u[0] = 1;
    return u;
}

bool full_order_top_class(const DeltaComplex& x, std::uint32_t m, std::string* why) {
    try {
        const std::uint32_t v = kronecker_top(x, top_indicator(x), m);
        if (v == 1 || v == m - 1) return true;
        if (why) *why = "top class pairs to " + std::to_string(v);
    } catch (const Error& e) {
        if (why) *why = e.what();
    }
    return false;
}

}  // namespace

bool evaluate_premise(const Premise& p, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    try {
        if (p.coeffs < 2) return fail("coefficients must be at least 2");
        switch (p.kind) {
            case PremiseKind::TopClass:
                return full_order_top_class(resolve_complex(p.space), p.coeffs, why);
            case PremiseKind::Product: {
                if (p.factors.empty()) return fail("no factors");
                const CohomologyRing ring = ring_for(p.space, p.coeffs);
                std::optional<RingElement> acc;
                for (const auto& f : p.factors) {
                    auto e = find_label(ring, f);
                    if (!e) return fail("no basis class labelled '" + f + "'");
                    if (acc && acc->degree + e->degree > ring.top_degree()) return fail("product exceeds the top degree");
                    acc = acc ? ring.multiply(*acc, *e) : *e;
                }
                if (ring.is_zero(*acc)) return fail("cup product vanishes");
                return true;
            }
            case PremiseKind::CrossProduct: {
                if (!ends_with(p.space, " x S1")) return fail("cross-product space must be '<M> x S1'");
                const DeltaComplex m = resolve_complex(p.space.substr(0, p.space.size() - 5));
                const ProductComplex pc = product_with_cells(m, gen::circle());
                const int d = m.dim();
                const ModVector t{1};
                auto c = cup_product(pc.complex, d, pc.pullback_first(d, top_indicator(m)), 1, pc.pullback_second(1, t), p.coeffs);
                const std::uint32_t v = kronecker_top(pc.complex, c, p.coeffs);
                if (v == 0) return fail("cross product pairs to zero");
                return true;
            }
            case PremiseKind::TensorProduct: {
                auto t = tensor_split(p.space);
                if (!t) return fail("tensor-product space must be '<M> (x) S<n>'");
                if (t->second < 1) return fail("sphere dimension must be positive");
                if (!is_prime(p.coeffs)) {
                    // H*(S^n) is free, so u x s has the order of u.
                    return full_order_top_class(resolve_complex(t->first), p.coeffs, why);
                }
                const CohomologyRing base = ring_for(t->first, p.coeffs);
                const CohomologyRing ring = kunneth_tensor(base, sphere_ring(t->second, p.coeffs));
                auto s = find_label(ring, "s" + std::to_string(t->second));
                if (!s) return fail("sphere class missing");
                for (Index i = 0; i < base.dimension(base.top_degree()); ++i) {
                    auto u = find_label(ring, base.label(base.top_degree(), i));
                    if (u && !ring.is_zero(ring.multiply(*u, *s))) return true;
                }
                return fail("no top class survives the tensor product");
            }
            case PremiseKind::CupLength: {
                const int cl = cup_length(ring_for(p.space, p.coeffs)).length;
                if (cl != p.value) return fail("cup-length is " + std::to_string(cl) + ", not " + std::to_string(p.value));
                return true;
            }
        }
    } catch (const Error& e) {
        return fail(e.what());
    }
    return fail("unknown premise kind");
}

// ---------------------------------------------------------------------------
// Checking

namespace {

int subject_dimension(const std::string& subject) {
    const auto x = subject.rfind(" x S");
    if (x != std::string::npos) {
        const std::string n = subject.substr(x + 4);
        if (!n.empty() && std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            return subject_dimension(subject.substr(0, x)) + std::stoi(n);
        }
    }
    if (subject.rfind("file:", 0) == 0) return read_dcx_file(subject.substr(5)).dim();
    return 3;
}

class Checker {
public:
    Checker(const Certificate& c, CheckReport& r) : report_(r) {
        for (const auto& p : c.premises) {
            if (!premises_.emplace(p.id, &p).second) error("duplicate premise id " + p.id);
        }
    }

    void error(const std::string& e) {
        report_.ok = false;
        report_.errors.push_back(e);
    }

    void node(const CertNode& n, bool upper, const std::string& path, int dim) {
        const std::string where = path + rule_name(n.rule);
        const bool upper_rule = n.rule == Rule::DIM || n.rule == Rule::PUSHOUT || n.rule == Rule::PRODUCT ||
                                n.rule == Rule::SPHERE;
        if (upper != upper_rule) error(where + ": rule not allowed in the " + (upper ? "upper" : "lower") + " trace");
        int sum = 0;
        for (const auto& c : n.children) sum += c.bound;
        const std::size_t kids = n.children.size();
        const Premise* prem = nullptr;
        if (n.premise == PremiseTag::Verified) {
            if (n.uses.empty()) {
                error(where + ": Verified node without a premise reference");
            } else if (auto it = premises_.find(n.uses); it == premises_.end()) {
                error(where + ": dangling reference " + n.uses);
            } else {
                prem = it->second;
            }
        } else {
            if (!n.uses.empty()) error(where + ": CatalogFact node must not reference a premise");
            report_.catalog_facts.push_back(rule_name(n.rule) + ": " + n.ref);
        }
        auto kind_is = [&](std::initializer_list<PremiseKind> ks) {
            if (!prem) return;
            for (auto k : ks) {
                if (prem->kind == k) return;
            }
            error(where + ": premise " + prem->id + " has the wrong kind for this rule");
        };
        auto leaf = [&] {
            if (kids != 0) error(where + ": rule takes no children");
        };
        switch (n.rule) {
            case Rule::R1:
                leaf();
                if (n.bound != 1) error(where + ": R1 gives bound 1");
                kind_is({PremiseKind::Product, PremiseKind::TopClass, PremiseKind::CupLength});
                if (prem && prem->kind == PremiseKind::Product && prem->factors.size() != 1) {
                    error(where + ": R1 premise must name a single class");
                }
                break;
            case Rule::R2:
                if (kids != 1) error(where + ": R2 takes one child");
                if (kids == 1 && n.bound != sum) error(where + ": R2 bound must equal the child bound");
                kind_is({PremiseKind::TopClass, PremiseKind::Product});
                break;
            case Rule::R3:
                if (kids < 2) error(where + ": R3 takes at least two children");
                if (n.bound != sum) {
                    error(where + ": R3 bound " + std::to_string(n.bound) + " is not the sum " + std::to_string(sum));
                }
                kind_is({PremiseKind::Product, PremiseKind::CupLength, PremiseKind::CrossProduct, PremiseKind::TensorProduct});
                if (prem) r3_premise(n, *prem, where);
                break;
            case Rule::R4:
                leaf();
                if (n.bound < 1 || n.bound > 3) error(where + ": R4 bound is the class degree (1..3)");
                kind_is({PremiseKind::TopClass});
                if (prem && n.bound != 3) error(where + ": top-class premise gives degree 3");
                break;
            case Rule::R5:
                leaf();
                if (n.bound != 3) error(where + ": R5 gives bound 3");
                kind_is({PremiseKind::TopClass});
                break;
            case Rule::COVER:
                if (kids != 1) error(where + ": COVER takes one child");
                if (kids == 1 && n.bound != sum) error(where + ": COVER bound must equal the child bound");
                if (n.premise != PremiseTag::CatalogFact) error(where + ": COVER is a catalog fact");
                break;
            case Rule::THEOREM:
                leaf();
                if (n.bound < 1 || n.bound > 3) error(where + ": THEOREM bound out of range");
                if (n.premise != PremiseTag::CatalogFact) error(where + ": THEOREM is a catalog fact");
                break;
            case Rule::DIM:
                leaf();
                if (n.bound != dim) error(where + ": DIM bound must be the dimension " + std::to_string(dim));
                break;
            case Rule::PUSHOUT:
                leaf();
                if (n.bound != 2) error(where + ": PUSHOUT gives bound 2");
                break;
            case Rule::SPHERE:
                leaf();
                if (n.bound != 1) error(where + ": SPHERE gives bound 1");
                break;
            case Rule::PRODUCT:
                if (kids < 2) error(where + ": PRODUCT takes at least two children");
                if (n.bound != sum) error(where + ": PRODUCT bound is not the sum of the children");
                break;
        }
        // DIM below PRODUCT bounds the 3-manifold factor.
        const int child_dim = n.rule == Rule::PRODUCT ? 3 : dim;
        for (const auto& c : n.children) node(c, upper, where + "/", child_dim);
    }

    void r3_premise(const CertNode& n, const Premise& p, const std::string& where) {
        const std::size_t kids = n.children.size();
        switch (p.kind) {
            case PremiseKind::Product: {
                if (p.factors.size() != kids) {
                    error(where + ": product premise has " + std::to_string(p.factors.size()) + " factors for " +
                          std::to_string(kids) + " children");
                    return;
                }
                for (std::size_t i = 0; i < kids; ++i) {
                    const auto& c = n.children[i];
                    auto it = premises_.find(c.uses);
                    if (c.rule == Rule::R1 && it != premises_.end() && it->second->kind == PremiseKind::Product) {
                        if (it->second->factors != std::vector<std::string>{p.factors[i]} || it->second->space != p.space) {
                            error(where + ": factor " + std::to_string(i) + " does not match child premise " + c.uses);
                        }
                    }
                }
                break;
            }
            case PremiseKind::CupLength:
                if (p.value < n.bound) error(where + ": cup-length " + std::to_string(p.value) + " below bound");
                for (const auto& c : n.children) {
                    if (c.rule != Rule::R1) error(where + ": cup-length premise needs R1 children");
                }
                break;
            case PremiseKind::CrossProduct:
            case PremiseKind::TensorProduct:
                if (kids != 2 || n.children[1].bound != 1) {
                    error(where + ": product with a sphere class takes the class and one R1 child");
                }
                break;
            default:
                break;
        }
    }

private:
    CheckReport& report_;
    std::map<std::string, const Premise*> premises_;
};

}  // namespace

CheckReport check_certificate(const Certificate& cert, unsigned jobs) {
    CheckReport report;
    Checker checker(cert, report);
    int dim = 3;
    try {
        dim = subject_dimension(cert.subject);
    } catch (const Error& e) {
        checker.error(std::string("subject: ") + e.what());
    }
    checker.node(cert.upper, true, "upper/", dim);
    checker.node(cert.lower, false, "lower/", dim);

    if (cert.lo > cert.hi) checker.error("interval is empty");
    if (cert.lower.bound != cert.lo) checker.error("lower trace proves " + std::to_string(cert.lower.bound) +
                                                   ", certificate claims " + std::to_string(cert.lo));
    if (cert.upper.bound != cert.hi) checker.error("upper trace proves " + std::to_string(cert.upper.bound) +
                                                   ", certificate claims " + std::to_string(cert.hi));
    if (cert.value.has_value() != (cert.lo == cert.hi)) checker.error("value present iff the bounds meet");
    if (cert.value && *cert.value != cert.lo) checker.error("value differs from the bounds");

    std::vector<std::pair<bool, std::string>> results(cert.premises.size());
    auto run = [&](std::size_t i) {
        std::string why;
        const bool ok = evaluate_premise(cert.premises[i], &why);
        return std::pair{ok, why};
    };
    if (jobs > 1) {
        for (std::size_t start = 0; start < results.size(); start += jobs) {
            std::vector<std::future<std::pair<bool, std::string>>> batch;
            const std::size_t stop = std::min(results.size(), start + jobs);
            for (std::size_t i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, run, i));
            for (std::size_t i = start; i < stop; ++i) results[i] = batch[i - start].get();
        }
    } else {
        for (std::size_t i = 0; i < cert.premises.size(); ++i) results[i] = run(i);
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].first) checker.error("premise " + cert.premises[i].id + " fails: " + results[i].second);
    }
    return report;
}

}  // namespace lscat
