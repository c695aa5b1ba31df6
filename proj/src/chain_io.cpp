#include "mills/chain_io.hpp"

#include <fstream>
#include <sstream>

namespace mills {

namespace {

std::string status_token(const std::optional<ChainTermStatus>& st) {
    if (!st) return "unchecked";
    switch (st->status) {
        case PrimeStatus::ProvablePrime: return "provable-prime";
        case PrimeStatus::ProbablePrime: return "probable-prime";
        case PrimeStatus::Composite: return "composite";
    }
    return "unchecked";
}

std::optional<ChainTermStatus> parse_status(const std::string& token,
                                            const std::string& method, int rounds,
                                            std::size_t line_no) {
    if (token == "unchecked") return std::nullopt;
    ChainTermStatus st;
    st.method = method;
    st.rounds = rounds;
    if (token == "provable-prime")
        st.status = PrimeStatus::ProvablePrime;
    else if (token == "probable-prime")
        st.status = PrimeStatus::ProbablePrime;
    else if (token == "composite")
        st.status = PrimeStatus::Composite;
    else
        throw ChainParseError("line " + std::to_string(line_no) +
                              ": unknown status token '" + token + "'");
    return st;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ChainParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

LoadedChain load_chain(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ChainParseError("cannot open chain file: " + path.string());

    ChainFileMeta meta;
    unsigned c = 0;
    BigInt seed;
    bool have_seed = false, have_c = false, have_magic = false;
    std::vector<std::uint64_t> offsets;
    std::vector<std::optional<ChainTermStatus>> statuses;
    bool have_term1 = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (!have_magic) {
            int version = -1;
            if (key != "millschain" || !(ss >> version))
                fail(line_no, "expected 'millschain <version>' header");
            if (version != 1) fail(line_no, "unsupported version " + std::to_string(version));
            have_magic = true;
            continue;
        }
        if (key == "c") {
            if (!(ss >> c) || c < 3) fail(line_no, "bad exponent");
            have_c = true;
        } else if (key == "seed") {
            std::string s;
            if (!(ss >> s)) fail(line_no, "missing seed value");
            try {
                seed = from_dec(s);
            } catch (const std::exception&) {
                fail(line_no, "seed is not a decimal integer");
            }
            have_seed = true;
        } else if (key == "prp-rounds") {
            if (!(ss >> meta.prp_rounds) || meta.prp_rounds < 1) fail(line_no, "bad prp-rounds");
        } else if (key == "rng-seed") {
            if (!(ss >> meta.rng_seed)) fail(line_no, "bad rng-seed");
        } else if (key == "term") {
            unsigned idx = 0;
            std::string status, method;
            int rounds = 0;
            if (!(ss >> idx >> status >> method >> rounds) || idx != 1)
                fail(line_no, "bad term line (only 'term 1' is valid)");
            if (have_term1) fail(line_no, "duplicate term line");
            statuses.push_back(parse_status(status, method == "-" ? "" : method, rounds, line_no));
            have_term1 = true;
        } else if (key == "step") {
            std::size_t idx = 0;
            std::uint64_t offset = 0;
            std::string status, method;
            int rounds = 0;
            if (!(ss >> idx >> offset >> status >> method >> rounds))
                fail(line_no, "bad step line");
            if (!have_term1) fail(line_no, "step before term line");
            if (idx != offsets.size() + 1)
                fail(line_no, "steps must be numbered consecutively from 1");
            if (offset == 0) fail(line_no, "offset must be positive");
            offsets.push_back(offset);
            statuses.push_back(parse_status(status, method == "-" ? "" : method, rounds, line_no));
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
        std::string extra;
        if (ss >> extra) fail(line_no, "trailing tokens");
    }
    if (!have_magic) throw ChainParseError("empty chain file: " + path.string());
    if (!have_c || !have_seed || !have_term1)
        throw ChainParseError("chain file missing c/seed/term lines: " + path.string());

    return {MillsChain::from_offsets(seed, c, offsets, std::move(statuses)), meta};
}

std::string chain_file_text(const MillsChain& chain, const ChainFileMeta& meta) {
    std::ostringstream out;
    out << "millschain 1\n";
    out << "c " << chain.c() << "\n";
    out << "seed " << to_dec(chain.seed()) << "\n";
    out << "prp-rounds " << meta.prp_rounds << "\n";
    out << "rng-seed " << meta.rng_seed << "\n";
    auto write_status = [&](const std::optional<ChainTermStatus>& st) {
        out << status_token(st) << " " << (st && !st->method.empty() ? st->method : "-") << " "
            << (st ? st->rounds : 0) << "\n";
    };
    out << "term 1 ";
    write_status(chain.status(0));
    for (std::size_t i = 0; i < chain.offsets().size(); ++i) {
        out << "step " << (i + 1) << " " << chain.offsets()[i] << " ";
        write_status(chain.status(i + 1));
    }
    return out.str();
}

void save_chain(const MillsChain& chain, const ChainFileMeta& meta,
                const std::filesystem::path& path) {
    std::filesystem::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    std::filesystem::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << chain_file_text(chain, meta);
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace mills
