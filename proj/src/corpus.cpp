#include "ccode/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace ccode {

TransitionSequence expand_permuted(const TransitionSequence& initial, const CyclePermutation& perm,
                                   int period, std::optional<int> truncation) {
    if (perm.dim != initial.dim) throw std::invalid_argument("expand: dimension mismatch");
    if (period < 1) throw std::invalid_argument("expand: period must be positive");
    const int len = static_cast<int>(initial.size());
    if (truncation && (*truncation < 0 || *truncation >= len - 1))
        throw std::invalid_argument("expand: truncation index must be below L-1");
    TransitionSequence out{initial.dim, {}};
    TransitionSequence segment = initial;
    for (int p = 0; p < period; ++p) {
        int take = (truncation && p == period - 1) ? *truncation + 1 : len;
        out.changes.insert(out.changes.end(), segment.changes.begin(),
                           segment.changes.begin() + take);
        if (p + 1 < period) segment = perm.apply_seq(segment);
    }
    return out;
}

namespace {

std::string strip_ws(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

CorpusEntry structural(std::string id, int d, int k, int n, std::string note, std::string initial,
                       std::string perm, int period, std::string reference = {}) {
    CorpusEntry e;
    e.id = std::move(id);
    e.d = d;
    e.k = k;
    e.kind = Kind::coil;
    e.expected_n = n;
    e.note = std::move(note);
    e.initial = strip_ws(initial);
    e.perm = std::move(perm);
    e.period = period;
    e.reference_text = strip_ws(reference);
    auto seq = expand_permuted(parse_sequence(e.initial, d), parse_permutation(e.perm, d), period);
    e.transitions = format_sequence(seq);
    return e;
}

CorpusEntry full(std::string id, int d, int k, Kind kind, int n, std::string note,
                 std::string transitions) {
    CorpusEntry e;
    e.id = std::move(id);
    e.d = d;
    e.k = k;
    e.kind = kind;
    e.expected_n = n;
    e.note = std::move(note);
    e.transitions = strip_ws(transitions);
    return e;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> entries;

    entries.push_back(structural(
        "coil-s2-d10-n348", 10, 2, 348, "record 10-coil", "0189720846 9847685740 278968076",
        "(123450)(786)9", 12,
        "01897208469847685740278968076"
        "12698316579658760851386976187"
        "23796427089706871602467987268"
        "34897538169817682713578968376"
        "45698046279628763824086976487"
        "50796157389736874635167987568"
        "01897208469847685740278968076"
        "12698316579658760851386976187"
        "23796427089706871602467987268"
        "34897538169817682713578968376"
        "45698046279628763824086976487"
        "50796157389736874635167987568"));

    entries.push_back(structural("coil-s2-d11-n638", 11, 2, 638, "long 11-coil",
                                 "0168763891 305943A671 35127A237", "(123456789A0)", 22));

    entries.push_back(structural(
        "coil-s2-d11-n640", 11, 2, 640, "record 11-coil", "A04A82A73A 26A38A27A4 8162A648A4 02",
        "(1234567890)A", 20,
        "A04A82A73A26A38A27A48162A648A402"
        "A15A93A84A37A49A38A59273A759A513"
        "A26A04A95A48A50A49A60384A860A624"
        "A37A15A06A59A61A50A71495A971A735"
        "A48A26A17A60A72A61A82506A082A846"
        "A59A37A28A71A83A72A93617A193A957"
        "A60A48A39A82A94A83A04728A204A068"
        "A71A59A40A93A05A94A15839A315A179"
        "A82A60A51A04A16A05A26940A426A280"
        "A93A71A62A15A27A16A37051A537A391"
        "A04A82A73A26A38A27A48162A648A402"
        "A15A93A84A37A49A38A59273A759A513"
        "A26A04A95A48A50A49A60384A860A624"
        "A37A15A06A59A61A50A71495A971A735"
        "A48A26A17A60A72A61A82506A082A846"
        "A59A37A28A71A83A72A93617A193A957"
        "A60A48A39A82A94A83A04728A204A068"
        "A71A59A40A93A05A94A15839A315A179"
        "A82A60A51A04A16A05A26940A426A280"
        "A93A71A62A15A27A16A37051A537A391"));

    entries.push_back(structural("coil-s3-d10-n100", 10, 3, 100, "record spread-3 code", "26014",
                                 "(1234567890)", 20));

    entries.push_back(structural("coil-s3-d11-n160a", 11, 3, 160, "record spread-3 code",
                                 "0A184A5234", "(12345670)(98)A", 16));

    entries.push_back(structural("coil-s3-d11-n160b", 11, 3, 160, "record spread-3 code",
                                 "0623184A", "(1234567890)A", 20));

    entries.push_back(structural(
        "coil-s2-d8-n94", 8, 2, 94, "longest natural 8-coil",
        "0314035046 0340745135 6253157407 5305670517 0317436", "01234567", 2));

    entries.push_back(full("coil-s2-d9-n188", 9, 2, Kind::coil, 188, "record 9-coil from joining",
                           "0123043254 2134256352 1324532105 1245231524 6142315712 3152413210 "
                           "4213245321 3461235421 3253045213 2458032105 1245231524 6142312541 "
                           "2304325421 3425635213 4732134253 1230523125 4123156321 4523124105 "
                           "42312548"));

    entries.push_back(full("snake-s2-d9-n190", 9, 2, Kind::snake, 190,
                           "record 9-snake from joining",
                           "0120314021 0541021432 1026431450 4134210431 4501432731 2014301263 "
                           "2143053102 3053145036 0431402143 1046806104 3145014310 6302143203 "
                           "5043203145 3654031405 4375314021 4310451341 0214316504 5314504120 "
                           "4501430540"));

    {
        // As printed in the source; does not verify at spread 3 (first
        // violation at pair (0,44)) and no small repair fixes it.
        auto e = full("coil-s3-d9-n58", 9, 3, Kind::coil, 58,
                      "record spread-3 code; printed text defective, fails verification",
                      "0123041502 1603570132 4038175014 5671536012 3674563017 60581735");
        e.source_defect = true;
        e.stated_n = 58;
        entries.push_back(std::move(e));
    }

    entries.push_back(full("coil-s5-d12-n58", 12, 5, Kind::coil, 58, "record spread-5 code",
                           "0123450617 2803196A04 72160548B7 014A836105 82A9167854 0613A84B"));

    {
        // The source states N=50 but prints 48 changes, which form a valid
        // spread-6 coil on their own; kept as printed.
        auto e = full("coil-s6-d13-n50", 13, 6, Kind::coil, 48,
                      "spread-6 code; source states N=50 but prints a valid 48-change coil",
                      "0123456071 82930A142B 9C630529A7 60124A8305 629B4C5A");
        e.source_defect = true;
        e.stated_n = 50;
        entries.push_back(std::move(e));
    }

    return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry* find_corpus(const std::string& id) {
    const auto& entries = corpus_entries();
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const CorpusEntry& e) { return e.id == id; });
    return it == entries.end() ? nullptr : &*it;
}

}  // namespace ccode
