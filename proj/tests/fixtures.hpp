// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared test corpora: a 50-episode hand-labeled fixture with a known
// removal ledger, a seeded synthetic corpus for scoring runs, and an
// identity corpus (description == transcript).

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "podsum/corpus.hpp"
#include "podsum/filters.hpp"

#include "support.hpp"

namespace fixtures {

inline std::string repeat(const std::string& s, std::size_t n) {
    std::string out;
    out.reserve(s.size() * n);
    for (std::size_t i = 0; i < n; ++i) out += s;
    return out;
}

inline const char* kProfanityList =
    "# synthetic test terms\n"
    "frak\n"
    "gorram\n"
    "smeg\n";

inline const char* kAdMarkers =
    "# sponsorship/advertisement markers\n"
    "sponsored by\n"
    "sponsorship\n"
    "brought to you by\n"
    "promo code\n"
    "use code\n"
    "discount code\n"
    "coupon code\n"
    "offer code\n"
    "support the show\n"
    "support this podcast\n"
    "patreon\n"
    "send in a voice message\n"
    "follow us on\n";

struct Fixture50 {
    podsum::Corpus corpus;
    podsum::FilterConfig cfg; // defaults plus word-list paths
    std::vector<podsum::LedgerStep> expected_steps; // removed_ids filled in
    std::vector<std::string> expected_kept_ids;
};

// Writes the two word lists into dir and builds the corpus. Every episode is
// labeled by its id prefix: keepNN survives all eight rules, all others are
// removed by exactly the rule their prefix names.
inline Fixture50 make_fixture50(const testsupport::TempDir& dir) {
    using podsum::Episode;

    Fixture50 fx;
    auto prof_path = dir.file("profanity_test.txt");
    auto ad_path = dir.file("ad_markers_test.txt");
    testsupport::write_text(prof_path, kProfanityList);
    testsupport::write_text(ad_path, kAdMarkers);
    fx.cfg.profanity_list_path = prof_path;
    fx.cfg.ad_marker_list_path = ad_path;

    std::vector<Episode>& eps = fx.corpus.episodes;
    int show_counter = 0;
    auto add = [&](const std::string& id, const std::string& desc,
                   const std::string& show_desc, double minutes) {
        Episode ep;
        ep.episode_id = id;
        ep.show_id = "show" + std::to_string(++show_counter);
        ep.episode_description = desc;
        ep.show_description = show_desc;
        ep.transcript = "this is the transcript for " + id +
                        " where the hosts talk at length about the topic of the week";
        ep.duration_minutes = minutes;
        eps.push_back(std::move(ep));
    };

    const std::string dup_source_a =
        "Welcome back to the garden show where we discuss seasonal planting tips for beginners.";
    const std::string dup_source_b =
        "We review classic films from the golden age of cinema with special guests.";
    const std::string show_identical =
        "This show explores the hidden corners of city life with local storytellers every single week.";

    // Interleaved so order preservation is actually exercised; duplicate
    // copies sit after their originals.
    add("keep01", dup_source_a, "A weekly gardening program for plant lovers of all levels.", 31);
    add("len1", "Too short.", "A show about many things.", 22);
    add("keep02", dup_source_b, "Two friends watching their way through the film canon.", 28);
    add("dup1", dup_source_a, "An unrelated show that copied its notes from somewhere else.", 25);
    add("keep03", "This is twenty chars", "A minimalist show with minimalist notes and long chats.", 18);
    add("dup2", dup_source_b, "Another show reusing the very same episode notes.", 33);
    add("show1", show_identical, show_identical, 40);
    add("keep04", repeat("The show about music and art. ", 25),
        "Conversations with painters sculptors and musicians working today.", 47);
    add("dup3", dup_source_b, "A third show with recycled description text.", 29);
    add("emo1", "\U0001F399️\U0001F399️\U0001F399️\U0001F399️\U0001F399️"
                "\U0001F399️\U0001F399️\U0001F399️\U0001F399️\U0001F399️ Hi!",
        "A show about sounds and voices from everywhere.", 12);
    add("keep05", "We sit down with a marathon runner to ask how the training really feels at mile twenty.",
        "Stories from the world of endurance sports told slowly.", 60.0);
    add("len2", "Tiny show notes", "A show with very few words in its notes.", 21);
    add("show2", "today we talk about the history of american jazz",
        "today we talk about the history of american blues", 35);
    add("keep06", "We're celebrating \U0001F389 ten years of stories from the road with friends old and new.",
        "A travel show recorded from a van somewhere in the mountains.", 44);
    add("emo2", repeat("\U0001F525", 18) + " New one!",
        "A hype show for sneaker releases and streetwear drops.", 19);
    add("dur1", "A long conversation about the economics of small farms and who actually profits from them.",
        "Interviews with people who grow the food we eat.", 61.0);
    add("keep07", "In this episode we sit down with a local chef to talk about home cooking.\n"
                  "We cover knives pans and the secrets of a good stock.\n"
                  "Sponsored by Acme Cookware use code STOCK at checkout.",
        "A kitchen-table show about food and the people who make it.", 38);
    add("prof1", "Today we get a little frak happy while ranking the loudest moments in action cinema history.",
        "Loud movies discussed loudly by two brothers.", 42);
    add("keep08", "Don't miss this one because we're finally answering the questions you've been sending all year.",
        "A mailbag show that answers whatever the listeners ask.", 26);
    add("lang1", "Bienvenidos al programa sobre cocina tradicional mexicana donde exploramos recetas antiguas con invitados especiales",
        "Un programa semanal sobre gastronomia y cultura.", 30);
    add("keep09", "We talk about the history of jazz music in America today with a guest from the archives.",
        "A music history hour with rare recordings and stories.", 52);
    add("ad1", "This episode is sponsored by Acme Widgets and brought to you by our friends at the factory\n"
               "Use promo code ACME20 when you check out at the store\n"
               "Visit https://acme.example.com for more of the deals",
        "A show that is mostly advertisements wrapped in a jingle.", 24);
    add("keep10", "A quiet look at the birds that pass through the city each spring and the people who count them.",
        "Field notes and long walks with a microphone.", 36);
    add("len3", repeat("This is a very long description of the episode. ", 16),
        "A show whose notes never seem to end at all.", 27);
    add("keep11", "Two detectives walk us through the coldest case they ever closed and what it cost them.",
        "True stories from retired investigators.", 49);
    add("emo3", repeat("\U0001F600", 20), "A show that communicates only in pictures.", 15);
    add("keep12", "What does the James Webb telescope actually see when it stares at nothing for weeks?",
        "Astronomy questions answered by working scientists.", 41);
    add("dur2", "An extended director's commentary on a three hour film that we refuse to cut down.",
        "Movie commentaries that run as long as the movies.", 90.5);
    add("keep13", "The startup that promised free lunch forever and the investors who believed it.",
        "Postmortems of companies that burned bright and fast.", 33);
    add("prof2", "The gorram machines keep winning and we are here to complain about it with style.",
        "Grumpy takes on modern technology from two old friends.", 37);
    add("keep14", "How a small town rebuilt its library after the flood, told by the volunteers who did it.",
        "Civic stories from places you have never visited.", 45);
    add("lang2", "Willkommen zu unserer Sendung über deutsche Geschichte und Kultur mit vielen spannenden Gesprächen und Geschichten",
        "Eine wöchentliche Sendung über Vergangenheit und Gegenwart.", 39);
    add("keep15", "We ask a grandmaster whether chess engines have made the game more beautiful or less.",
        "Board games taken far too seriously by people who love them.", 29);
    add("ad2", "Get twenty percent off with our discount code PODCAST at checkout today\n"
               "Support the show on patreon.com/ourshow and keep us going",
        "A show that exists mainly to read coupon codes aloud.", 23);
    add("keep16", "A meditation teacher explains why doing nothing is the hardest thing you will try this week.",
        "Slow conversations about attention and rest.", 20);
    add("len4", repeat("Notes that go on and on about everything that happened this week in the studio. ", 12),
        "A show with extremely thorough episode notes.", 32);
    add("keep17", "The referee who blew the biggest call in the final tells his side of the story at last.",
        "Sports stories from the people nobody interviews.", 55);
    add("dur3", "A full unedited town hall meeting about the new bridge including all public comments.",
        "Local government recorded live and in full.", 180.0);
    add("keep18", "Why the sourdough craze never really ended and what your starter says about you.",
        "Food trends explained by bakers and scientists.", 34);
    add("prof3", "A calm episode about repairing old clocks with patient hands.",
        "The smeg chronicles where we break down everything.", 28);
    add("keep19", "A poet reads her favorite failures and explains why the published versions are worse.",
        "Readings and conversations about writing poetry.", 43);
    add("lang3", "Bonjour et bienvenue dans notre émission sur la cuisine française traditionnelle avec des invités du monde entier",
        "Une émission hebdomadaire sur la gastronomie.", 26);
    add("keep20", "We trace a single shipping container across three oceans to see where your stuff comes from.",
        "Global supply chains explained one object at a time.", 48);
    add("ad3", "Use code POD20 at checkout — sponsored by Acme",
        "A feed of promotional reads between real episodes.", 17);
    add("keep21", "The language teacher who learned twelve languages and says the twelfth was the easiest.",
        "Conversations about how people actually learn languages.", 31);
    add("keep22", "What happens to all the pennies? A mint historian follows the coins nobody wants.",
        "Small histories of everyday objects and habits.", 27);
    add("keep23", "A night shift nurse tells us what the hospital sounds like when everyone else is asleep.",
        "First person stories from working people.", 39);
    add("keep24", "The chess hustlers of the park explain how to win a dollar and keep a friend.",
        "Street games and the rules that govern them.", 25);
    add("keep25", "An economist and a plumber argue about what a fair price for an emergency really is.",
        "Unlikely pairs argue about ordinary questions.", 46);
    add("keep26", "How the city decided where the bus stops go, and why your corner lost.",
        "Urban planning stories for people who ride the bus.", 37);

    auto expect = [&fx](const char* rule, std::size_t remaining,
                        std::vector<std::string> ids) {
        podsum::LedgerStep step;
        step.rule = rule;
        step.removed = ids.size();
        step.remaining = remaining;
        step.removed_ids = std::move(ids);
        fx.expected_steps.push_back(std::move(step));
    };
    expect("desc-length", 46, {"len1", "len2", "len3", "len4"});
    expect("near-duplicate", 43, {"dup1", "dup2", "dup3"});
    expect("show-similar", 41, {"show1", "show2"});
    expect("emoji-dominated", 38, {"emo1", "emo2", "emo3"});
    expect("duration", 35, {"dur1", "dur2", "dur3"});
    expect("profanity", 32, {"prof1", "prof2", "prof3"});
    expect("non-english", 29, {"lang1", "lang2", "lang3"});
    expect("ad-dominated", 26, {"ad1", "ad2", "ad3"});

    for (const auto& ep : eps) {
        if (ep.episode_id.rfind("keep", 0) == 0) {
            fx.expected_kept_ids.push_back(ep.episode_id);
        }
    }
    return fx;
}

// Seeded synthetic corpus: transcripts of a few hundred tokens whose openings
// overlap the descriptions, the shape lead-k baselines exploit.
inline podsum::Corpus make_synthetic_corpus(std::size_t n = 200,
                                            std::uint64_t seed = 42) {
    static const char* const kFunctionWords[] = {
        "the", "a", "of", "to", "and", "in", "we", "is", "it", "about",
        "this", "for", "on", "with", "that", "you", "as", "at", "by", "an",
    };
    std::mt19937_64 rng(seed);
    auto content_word = [&rng] {
        return "topic" + std::to_string(rng() % 320);
    };
    auto any_word = [&](std::vector<std::string>* pool) -> std::string {
        if (pool && !pool->empty() && rng() % 10 < 6) {
            return (*pool)[rng() % pool->size()];
        }
        if (rng() % 10 < 3) {
            return kFunctionWords[rng() % std::size(kFunctionWords)];
        }
        return content_word();
    };

    podsum::Corpus corpus;
    for (std::size_t i = 0; i < n; ++i) {
        podsum::Episode ep;
        char id[32];
        std::snprintf(id, sizeof(id), "ep%04zu", i + 1);
        ep.episode_id = id;
        ep.show_id = "show" + std::to_string(i / 10);

        std::size_t tlen = 650 + rng() % 300;
        std::vector<std::string> transcript_tokens;
        transcript_tokens.reserve(tlen);
        for (std::size_t k = 0; k < tlen; ++k) {
            transcript_tokens.push_back(any_word(nullptr));
        }
        std::vector<std::string> lead(transcript_tokens.begin(),
                                      transcript_tokens.begin() + 250);

        std::size_t dlen = 35 + rng() % 26;
        std::string desc;
        for (std::size_t k = 0; k < dlen; ++k) {
            if (k > 0) desc.push_back(' ');
            desc += any_word(&lead);
        }

        std::string transcript;
        for (std::size_t k = 0; k < tlen; ++k) {
            if (k > 0) transcript.push_back(' ');
            transcript += transcript_tokens[k];
        }

        ep.episode_description = std::move(desc);
        ep.show_description = "synthetic show " + std::to_string(i / 10);
        ep.transcript = std::move(transcript);
        ep.duration_minutes = 5.0 + static_cast<double>(rng() % 50);
        corpus.episodes.push_back(std::move(ep));
    }
    return corpus;
}

// Corpus whose descriptions equal their transcripts, so a long-enough
// first-k baseline reproduces the reference exactly.
inline podsum::Corpus make_identity_corpus(std::size_t n = 25,
                                           std::uint64_t seed = 7) {
    std::mt19937_64 rng(seed);
    podsum::Corpus corpus;
    for (std::size_t i = 0; i < n; ++i) {
        podsum::Episode ep;
        ep.episode_id = "id" + std::to_string(i + 1);
        ep.show_id = "show1";
        std::size_t len = 20 + rng() % 21;
        std::string text;
        for (std::size_t k = 0; k < len; ++k) {
            if (k > 0) text.push_back(' ');
            text += "word" + std::to_string(rng() % 50);
        }
        ep.episode_description = text;
        ep.transcript = std::move(text);
        ep.show_description = "identity fixture";
        ep.duration_minutes = 10;
        corpus.episodes.push_back(std::move(ep));
    }
    return corpus;
}

// Minimal corpus of n distinct ids (for split arithmetic at scale).
inline podsum::Corpus make_id_corpus(std::size_t n) {
    podsum::Corpus corpus;
    corpus.episodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        podsum::Episode ep;
        ep.episode_id = "e" + std::to_string(i + 1);
        ep.show_id = "s";
        ep.episode_description = "d";
        ep.show_description = "s";
        ep.transcript = "t";
        ep.duration_minutes = 1;
        corpus.episodes.push_back(std::move(ep));
    }
    return corpus;
}

} // namespace fixtures
