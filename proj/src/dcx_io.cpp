#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lscat/delta_complex.hpp"
#include "lscat/error.hpp"

namespace lscat {

void write_dcx(std::ostream& out, const DeltaComplex& complex) {
    out << "dcx 1\n" << "dim " << complex.dim() << '\n';
    out << "0 " << complex.count(0) << '\n';
    for (Index s = 0; s < complex.count(0); ++s) out << '\n';
    for (int k = 1; k <= complex.dim(); ++k) {
        out << k << ' ' << complex.count(k) << '\n';
        for (Index s = 0; s < complex.count(k); ++s) {
            for (int i = 0; i <= k; ++i) out << (i ? " " : "") << complex.face(k, s, i);
            out << '\n';
        }
    }
}

std::string to_dcx(const DeltaComplex& complex) {
    std::ostringstream out;
    write_dcx(out, complex);
    return out.str();
}

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    std::size_t position() const { return pos_; }

    // Next line without its terminator; sets `start` to its byte offset.
    std::string_view next(std::size_t& start) {
        if (done()) throw ParseError(pos_, "unexpected end of input");
        start = pos_;
        auto nl = text_.find('\n', pos_);
        std::string_view line = text_.substr(pos_, nl == std::string_view::npos ? text_.npos : nl - pos_);
        pos_ = nl == std::string_view::npos ? text_.size() : nl + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Whitespace-separated unsigned integers of a line.
std::vector<Index> numbers(std::string_view line, std::size_t start) {
    std::vector<Index> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        Index value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        const std::size_t used = static_cast<std::size_t>(ptr - (line.data() + i));
        if (ec != std::errc() || used == 0 ||
            (i + used < line.size() && line[i + used] != ' ' && line[i + used] != '\t')) {
            throw ParseError(start + i, "expected a non-negative integer");
        }
        out.push_back(value);
        i += used;
    }
    return out;
}

std::pair<std::string_view, std::vector<Index>> keyword_line(LineReader& in, std::size_t& start) {
    std::string_view line = in.next(start);
    auto sp = line.find_first_of(" \t");
    std::string_view word = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : line.substr(sp);
    return {word, numbers(rest, start + word.size())};
}

}  // namespace

DeltaComplex parse_dcx(std::string_view text) {
    LineReader in(text);
    std::size_t start = 0;
    auto [magic, version] = keyword_line(in, start);
    if (magic != "dcx" || version != std::vector<Index>{1}) {
        throw ParseError(start, "expected header 'dcx 1'");
    }
    auto [dim_word, dim_value] = keyword_line(in, start);
    if (dim_word != "dim" || dim_value.size() != 1) throw ParseError(start, "expected 'dim D'");
    const Index dim = dim_value[0];
    if (dim > 16) throw ParseError(start, "dimension too large");

    Index vertex_count = 0;
    std::vector<std::vector<std::vector<Index>>> faces(dim);
    for (Index k = 0; k <= dim; ++k) {
        std::string_view line = in.next(start);
        auto header = numbers(line, start);
        if (header.size() != 2 || header[0] != k) {
            throw ParseError(start, "expected section header '" + std::to_string(k) + " <count>'");
        }
        const Index count = header[1];
        if (k == 0) vertex_count = count;
        for (Index s = 0; s < count; ++s) {
            const std::string_view line_text = in.next(start);
            auto row = numbers(line_text, start);
            if (k == 0) {
                if (!row.empty()) throw ParseError(start, "vertex lines must be empty");
                continue;
            }
            if (row.size() != k + 1) {
                throw ParseError(start, "expected " + std::to_string(k + 1) + " face indices");
            }
            faces[k - 1].push_back(std::move(row));
        }
    }
    while (!in.done()) {
        std::string_view line = in.next(start);
        if (line.find_first_not_of(" \t") != std::string_view::npos) {
            throw ParseError(start, "trailing content after last section");
        }
    }
    return DeltaComplex(vertex_count, std::move(faces));
}

DeltaComplex read_dcx_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dcx(buf.str());
}

}  // namespace lscat
