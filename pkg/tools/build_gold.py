"""Write the hand-built gold corpus to src/countability/data/corpus/gold.npir.

Each record lists the analyzed source NPs and the reference English with
NP regions marked ``[[ID|text]]``.  References were written by hand, one
rule application at a time; this script only serializes them.

    python tools/build_gold.py
"""

from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "countability" / "data" / "corpus" / "gold.npir"


def N(id, head, role=None, **kw):
    np = {"id": str(id), "head_ja": head}
    if role:
        np["syntactic_role"] = role
    np.update(kw)
    return np


def S(sid, verb, template, nps, gold):
    rec = {"id": sid}
    if verb:
        rec["main_verb_ja"] = verb
    rec.update(template=template, nps=nps, gold=gold)
    return rec


SUBJ, OBJ, COMP = "SUBJECT", "OBJECT", "COPULA_COMPLEMENT"
DIG = {"cardinal_style": "digits"}

CORPUS = [
    # the four worked translations
    S("p1", "naru", "{np:1} become {np:2}",
      [N(1, "kodomo", SUBJ, determiner_ja="taitei-no"), N(2, "otona", COMP)],
      "[[1|Most children]] become [[2|adults]]"),
    S("p2", "zetumetu", "{np:1} died out", [N(1, "manmosu", SUBJ)], "[[1|Mammoths]] died out"),
    S("p3", "aru", "There {be:1} {list:1,2,3}",
      [N(1, "tofu", SUBJ, cardinal=3, classifier_ja="chou", **DIG),
       N(2, "hasami", cardinal=1, classifier_ja="chou", **DIG),
       N(3, "houchou", cardinal=2, classifier_ja="chou", **DIG)],
      "There are [[1|3 pieces of tofu]], [[2|1 pair of scissors]] and [[3|2 knives]]"),
    S("p4", "da", "That {be:1} {np:2}", [N(1, "sore", SUBJ), N(2, "dougu", COMP)],
      "That is [[2|a piece of equipment]]"),

    # restrictive modification
    S("g001", "yomu", "{np:1} read {np:2}",
      [N(1, "sensei", SUBJ, definite=True), N(2, "hon", OBJ, determiner_ja="watashi-no")],
      "[[1|The teacher]] read [[2|my book]]"),
    S("g002", "zetumetu", "{np:1} died out", [N(1, "kyouryuu", SUBJ, determiner_ja="kare-no")],
      "[[1|His dinosaur]] died out"),
    S("g003", "da", "{np:1} who came to dinner {be:1} {np:2}",
      [N(1, "hito", SUBJ, restrictively_modified=True, definite=True), N(2, "isha", COMP)],
      "[[1|The person]] who came to dinner is [[2|a doctor]]"),
    S("g004", "suki", "{np:1} likes {np:2}",
      [N(1, "kazoku", SUBJ, determiner_ja="watashi-no"), N(2, "kuruma", OBJ, determiner_ja="kono")],
      "[[1|My family]] likes [[2|this car]]"),
    S("g005", "shinka", "{np:1} on this island evolved",
      [N(1, "tori", SUBJ, restrictively_modified=True, definite=True, explicit_plural=True)],
      "[[1|The birds]] on this island evolved"),
    S("g006", "suki", "{np:1} like {np:2}",
      [N(1, "gakusei", SUBJ, explicit_plural=True), N(2, "hon", OBJ, determiner_ja="kare-no")],
      "[[1|Students]] like [[2|his book]]"),

    # generic-subject verbs
    S("g007", "zetumetu", "{np:1} died out", [N(1, "kyouryuu", SUBJ)], "[[1|Dinosaurs]] died out"),
    S("g008", "shinka", "{np:1} evolved", [N(1, "tori", SUBJ)], "[[1|Birds]] evolved"),
    S("g009", "shinka", "{np:1} evolved", [N(1, "sakana", SUBJ)], "[[1|Fish]] evolved"),
    S("g010", "shinka", "{np:1} evolved", [N(1, "kutsu", SUBJ)], "[[1|Shoes]] evolved"),
    S("g011", "shinka", "{np:1} evolved", [N(1, "bi-ru", SUBJ)], "[[1|Beer]] evolved"),
    S("g012", "zetumetu", "{np:1} died out after {np:2}", [N(1, "zou", SUBJ), N(2, "jiko")],
      "[[1|Elephants]] died out after [[2|an accident]]"),
    S("g013", "shinka", "{np:1} evolved into {np:2}",
      [N(1, "kyouryuu", SUBJ), N(2, "tori", explicit_plural=True)],
      "[[1|Dinosaurs]] evolved into [[2|birds]]"),
    S("g014", "shinka", "{np:1} evolved", [N(1, "ifuku", SUBJ)], "[[1|Clothes]] evolved"),

    # copula subject under the complement's category
    S("g015", "da", "{np:1} {be:1} {np:2}", [N(1, "manmosu", SUBJ), N(2, "doubutsu", COMP)],
      "[[1|Mammoths]] are [[2|animals]]"),
    S("g016", "da", "{np:1} {be:1} {np:2}", [N(1, "inu", SUBJ), N(2, "honyuurui", COMP)],
      "[[1|Dogs]] are [[2|mammals]]"),
    S("g017", "da", "{np:1} {be:1} {np:2}", [N(1, "zou", SUBJ), N(2, "doubutsu", COMP)],
      "[[1|Elephants]] are [[2|animals]]"),
    S("g018", "da", "{np:1} {be:1} {np:2}", [N(1, "josei", SUBJ), N(2, "hito", COMP)],
      "[[1|Women]] are [[2|people]]"),
    S("g019", "da", "{np:1} {be:1} {np:2}", [N(1, "tori", SUBJ), N(2, "doubutsu", COMP)],
      "[[1|Birds]] are [[2|animals]]"),
    S("g020", "da", "{np:1} {be:1} {np:2}", [N(1, "sakana", SUBJ), N(2, "doubutsu", COMP)],
      "[[1|Fish]] are [[2|animals]]"),
    S("g021", "da", "{np:1} {be:1} {np:2}", [N(1, "isu", SUBJ), N(2, "kagu", COMP)],
      "[[1|Chairs]] are [[2|pieces of furniture]]"),

    # purpose targets (-muke)
    S("g022", "kau", "I bought {np:1} for {np:2}",
      [N(1, "zasshi", OBJ, purpose_target_of="2"), N(2, "josei")],
      "I bought [[1|a magazine]] for [[2|women]]"),
    S("g023", "tsukuru", "I made {np:1} for {np:2}",
      [N(1, "kougu", OBJ), N(2, "enjinia", determiner_ja="muke")],
      "I made [[1|a tool]] for [[2|engineers]]"),
    S("g024", "aru", "There {be:1} {np:1} for {np:2}",
      [N(1, "gakkou", SUBJ, purpose_target_of="2"), N(2, "kodomo")],
      "There is [[1|a school]] for [[2|children]]"),
    S("g025", "kau", "I bought {np:1} for {np:2}",
      [N(1, "kagu", OBJ, purpose_target_of="2"), N(2, "gakusei")],
      "I bought [[1|furniture]] for [[2|students]]"),
    S("g026", "tsukuru", "{np:1} made {np:2} for {np:3}",
      [N(1, "seifu", SUBJ, definite=True), N(2, "keikaku", OBJ, purpose_target_of="3"), N(3, "kodomo")],
      "[[1|The government]] made [[2|a plan]] for [[3|children]]"),
    S("g027", "yomu", "{np:1} read {np:2} for {np:3}",
      [N(1, "isha", SUBJ, explicit_plural=True), N(2, "shinbun", OBJ, purpose_target_of="3"), N(3, "enjinia")],
      "[[1|Doctors]] read [[2|a newspaper]] for [[3|engineers]]"),

    # generic-object verbs
    S("g028", "suki", "I like {np:1}", [N(1, "ke-ki", OBJ)], "I like [[1|cake]]"),
    S("g029", "suki", "I like {np:1}", [N(1, "inu", OBJ)], "I like [[1|dogs]]"),
    S("g030", "suki", "I like {np:1}", [N(1, "bi-ru", OBJ)], "I like [[1|beer]]"),
    S("g031", "aisuru", "I love {np:1}", [N(1, "hon", OBJ)], "I love [[1|books]]"),
    S("g032", "suki", "{np:1} like {np:2}",
      [N(1, "kodomo", SUBJ, determiner_ja="taitei-no"), N(2, "zou", OBJ)],
      "[[1|Most children]] like [[2|elephants]]"),
    S("g033", "suki", "{np:1} like {np:2}",
      [N(1, "inu", SUBJ, determiner_ja="subete-no"), N(2, "ke-ki", OBJ)],
      "[[1|All dogs]] like [[2|cake]]"),
    S("g034", "aisuru", "{np:1} loves {np:2}",
      [N(1, "sensei", SUBJ, definite=True), N(2, "jouhou", OBJ)],
      "[[1|The teacher]] loves [[2|information]]"),
    S("g035", "suki", "{np:1} likes {np:2}",
      [N(1, "josei", SUBJ, definite=True), N(2, "hasami", OBJ)],
      "[[1|The woman]] likes [[2|scissors]]"),
    S("g036", "aisuru", "{np:1} love {np:2}",
      [N(1, "gakusei", SUBJ, explicit_plural=True), N(2, "ifuku", OBJ)],
      "[[1|Students]] love [[2|clothes]]"),

    # copula complements
    S("g037", "da", "NTT {be:1} {np:2}", [N(1, "NTT", SUBJ), N(2, "denwagaisha", COMP)],
      "NTT is [[2|a telephone company]]"),
    S("g038", "da", "{np:1} {be:1} {np:2}",
      [N(1, "kodomo", SUBJ, determiner_ja="watashi-no", explicit_plural=True), N(2, "gakusei", COMP)],
      "[[1|My children]] are [[2|students]]"),
    S("g039", "da", "This {be:1} {np:2}", [N(1, "kore", SUBJ), N(2, "zubon", COMP)],
      "This is [[2|a pair of trousers]]"),
    S("g040", "da", "Those {be:1} {np:2}", [N(1, "sore", SUBJ, explicit_plural=True), N(2, "kagu", COMP)],
      "Those are [[2|pieces of furniture]]"),
    S("g041", "naru", "{np:1} became {np:2}",
      [N(1, "kodomo", SUBJ, definite=True), N(2, "enjinia", COMP)],
      "[[1|The child]] became [[2|an engineer]]"),
    S("g042", "da", "That {be:1} {np:2}", [N(1, "sore", SUBJ), N(2, "ifuku", COMP)],
      "That is [[2|a garment]]"),
    S("g043", "da", "That {be:1} {np:2}", [N(1, "sore", SUBJ), N(2, "zou", COMP)],
      "That is [[2|an elephant]]"),
    S("g044", "da", "These {be:1} {np:2}", [N(1, "kore", SUBJ, explicit_plural=True), N(2, "megane", COMP)],
      "These are [[2|pairs of glasses]]"),
    S("g045", "da", "That {be:1} {np:2}", [N(1, "sore", SUBJ), N(2, "kyouiku", COMP)],
      "That is [[2|an education]]"),
    S("g046", "naru", "{np:1} became {np:2}",
      [N(1, "gakusei", SUBJ, determiner_ja="onoono-no"), N(2, "otona", COMP)],
      "[[1|Each student]] became [[2|an adult]]"),
    S("g047", "naru", "{np:1} became {np:2}",
      [N(1, "kodomo", SUBJ, definite=True, explicit_plural=True), N(2, "otona", COMP)],
      "[[1|The children]] became [[2|adults]]"),

    # apposition
    S("g048", "kau", "NTT, {np:2}, bought {np:3}",
      [N(1, "NTT", SUBJ), N(2, "denwagaisha", "APPOSITIVE_TO(1)"), N(3, "kuruma", OBJ)],
      "NTT, [[2|a telephone company]], bought [[3|a car]]"),
    S("g049", "kau", "{np:1}, {np:2}, bought {np:3}",
      [N(1, "isha", SUBJ, definite=True), N(2, "josei", "APPOSITIVE_TO(1)"), N(3, "ie", OBJ)],
      "[[1|The doctor]], [[2|a woman]], bought [[3|a house]]"),
    S("g050", "hakobu", "{np:1}, {np:2}, carried {np:3}",
      [N(1, "sensei", SUBJ, determiner_ja="ryouhou-no"), N(2, "enjinia", "APPOSITIVE_TO(1)"), N(3, "hako", OBJ)],
      "[[1|Both teachers]], [[2|engineers]], carried [[3|a box]]"),
    S("g051", "okuru", "{np:1}, {np:2}, sent {np:3}",
      [N(1, "seifu", SUBJ, definite=True), N(2, "iinkai", "APPOSITIVE_TO(1)"), N(3, "keikaku", OBJ)],
      "[[1|The government]], [[2|a committee]], sent [[3|a plan]]"),
    S("g052", "miru", "I saw {np:1}, {np:2}",
      [N(1, "zou", OBJ), N(2, "doubutsu", "APPOSITIVE_TO(1)")],
      "I saw [[1|an elephant]], [[2|an animal]]"),
    S("g053", "miru", "I saw {np:1}, {np:2}",
      [N(1, "inu", OBJ, explicit_plural=True), N(2, "honyuurui", "APPOSITIVE_TO(1)")],
      "I saw [[1|dogs]], [[2|mammals]]"),

    # explicit plural marker
    S("g054", "kau", "{np:1} bought {np:2}",
      [N(1, "gakusei", SUBJ, explicit_plural=True), N(2, "hon", OBJ)],
      "[[1|Students]] bought [[2|a book]]"),
    S("g055", "miru", "I saw {np:1}", [N(1, "inu", OBJ, explicit_plural=True)], "I saw [[1|dogs]]"),
    S("g056", "miru", "I saw {np:1}", [N(1, "kagu", OBJ, explicit_plural=True)],
      "I saw [[1|pieces of furniture]]"),
    S("g057", "miru", "I saw {np:1}", [N(1, "hitsuji", OBJ, explicit_plural=True)], "I saw [[1|sheep]]"),
    S("g058", "hakobu", "I carried {np:1}", [N(1, "hasami", OBJ, explicit_plural=True)],
      "I carried [[1|pairs of scissors]]"),
    S("g059", "hakobu", "{np:1} carried {np:2}",
      [N(1, "kodomo", SUBJ, explicit_plural=True), N(2, "tsukue", OBJ)],
      "[[1|Children]] carried [[2|a desk]]"),
    S("g060", "miru", "{np:1} saw {np:2}",
      [N(1, "josei", SUBJ, explicit_plural=True, definite=True), N(2, "nezumi", OBJ, explicit_plural=True)],
      "[[1|The women]] saw [[2|mice]]"),

    # determiners
    S("g061", "kau", "{np:1} bought {np:2}",
      [N(1, "gakusei", SUBJ, determiner_ja="onoono-no"), N(2, "hon", OBJ)],
      "[[1|Each student]] bought [[2|a book]]"),
    S("g062", "miru", "I saw {np:1}", [N(1, "ke-ki", OBJ, determiner_ja="kazukazu-no")],
      "I saw [[1|many cakes]]"),
    S("g063", "taberu", "I ate {np:1}", [N(1, "ke-ki", OBJ, determiner_ja="amari-no")],
      "I ate [[1|too much cake]]"),
    S("g064", "miru", "I saw {np:1}", [N(1, "inu", OBJ, determiner_ja="takusan-no")],
      "I saw [[1|many dogs]]"),
    S("g065", "okuru", "{np:1} sent {np:2}",
      [N(1, "seifu", SUBJ, definite=True), N(2, "jouhou", OBJ, determiner_ja="takusan-no")],
      "[[1|The government]] sent [[2|much information]]"),
    S("g066", "nomu", "I drank {np:1}", [N(1, "mizu", OBJ, determiner_ja="sukoshi-no")],
      "I drank [[1|a little water]]"),
    S("g067", "kau", "I bought {np:1}", [N(1, "ringo", OBJ, determiner_ja="sukoshi-no")],
      "I bought [[1|a few apples]]"),
    S("g068", "tsukau", "I used {np:1}", [N(1, "hasami", OBJ, determiner_ja="ryouhou-no")],
      "I used [[1|both pairs of scissors]]"),
    S("g069", "kau", "I bought {np:1}", [N(1, "kuruma", OBJ, determiner_ja="hitotsu-no")],
      "I bought [[1|one car]]"),
    S("g070", "taberu", "{np:1} ate {np:2}",
      [N(1, "kodomo", SUBJ, determiner_ja="taitei-no"), N(2, "piza", OBJ, determiner_ja="amari-no")],
      "[[1|Most children]] ate [[2|too much pizza]]"),
    S("g071", "kau", "{np:1} bought {np:2}",
      [N(1, "hito", SUBJ, determiner_ja="onoono-no"), N(2, "kutsu", OBJ, determiner_ja="ryouhou-no")],
      "[[1|Each person]] bought [[2|both shoes]]"),
    S("g072", "miru", "I saw {np:1}", [N(1, "hon", OBJ, determiner_ja="takusan-no")],
      "I saw [[1|many books]]"),

    # numeral + classifier
    S("g073", "taberu", "I ate {np:1}", [N(1, "zou", OBJ, cardinal=1, classifier_ja="kire")],
      "I ate [[1|a slice of elephant]]"),
    S("g074", "taberu", "I ate {np:1}", [N(1, "ke-ki", OBJ, cardinal=1, classifier_ja="kire")],
      "I ate [[1|a slice of cake]]"),
    S("g075", "taberu", "{np:1} ate {np:2}",
      [N(1, "kodomo", SUBJ, explicit_plural=True), N(2, "piza", OBJ, cardinal=2, classifier_ja="kire")],
      "[[1|Children]] ate [[2|two slices of pizza]]"),
    S("g076", "kau", "I bought {np:1}", [N(1, "ke-ki", OBJ, classifier_ja="yama")],
      "I bought [[1|a pile of cakes]]"),
    S("g077", "nomu", "I drank {np:1}", [N(1, "mizu", OBJ, cardinal=2, classifier_ja="hai")],
      "I drank [[1|two glasses of water]]"),
    S("g078", "kau", "I bought {np:1}", [N(1, "kami", OBJ, cardinal=3, classifier_ja="mai", **DIG)],
      "I bought [[1|3 sheets of paper]]"),
    S("g079", "aru", "There {be:1} {np:1}", [N(1, "inu", SUBJ, cardinal=2, classifier_ja="hiki", **DIG)],
      "There are [[1|2 dogs]]"),
    S("g080", "miru", "I saw {np:1}", [N(1, "kuruma", OBJ, cardinal=5, classifier_ja="dai")],
      "I saw [[1|five cars]]"),
    S("g081", "hakobu", "I carried {np:1}", [N(1, "suna", OBJ, classifier_ja="yama")],
      "I carried [[1|a pile of sand]]"),
    S("g082", "hakobu", "{np:1} carried {np:2}",
      [N(1, "sensei", SUBJ, definite=True), N(2, "houchou", OBJ, classifier_ja="hako")],
      "[[1|The teacher]] carried [[2|a box of knives]]"),
    S("g083", "taberu", "I ate {np:1}", [N(1, "kome", OBJ, cardinal=1, classifier_ja="tsubu")],
      "I ate [[1|a grain of rice]]"),
    S("g084", "motsu", "He has {np:1} of Japanese", [N(1, "chishiki", OBJ, classifier_ja="ko")],
      "He has [[1|a knowledge]] of Japanese"),
    S("g085", "miru", "I saw {np:1}", [N(1, "basu", OBJ, cardinal=2, classifier_ja="dai")],
      "I saw [[1|two buses]]"),
    S("g086", "nomu", "{np:1} drank {np:2}",
      [N(1, "gakusei", SUBJ, explicit_plural=True), N(2, "bi-ru", OBJ, cardinal=3, classifier_ja="hai")],
      "[[1|Students]] drank [[2|three glasses of beer]]"),
    S("g087", "kau", "I bought {np:1}", [N(1, "ifuku", OBJ, cardinal=3, classifier_ja="chou")],
      "I bought [[1|three garments]]"),
    S("g088", "kau", "I bought {np:1}", [N(1, "zubon", OBJ, cardinal=1, classifier_ja="chou", **DIG)],
      "I bought [[1|1 pair of trousers]]"),
    S("g089", "kau", "I bought {np:1}", [N(1, "kagu", OBJ, cardinal=2, classifier_ja="ko")],
      "I bought [[1|two pieces of furniture]]"),
    S("g090", "kau", "I bought {np:1}", [N(1, "pan", OBJ, cardinal=4, classifier_ja="ko")],
      "I bought [[1|four loaves of bread]]"),
    S("g091", "aru", "There {be:1} {np:1}", [N(1, "hasami", SUBJ, cardinal=1, classifier_ja="chou")],
      "There is [[1|a pair of scissors]]"),
    S("g092", "miru", "I saw {np:1}", [N(1, "tori", OBJ, cardinal=1, classifier_ja="hiki", **DIG)],
      "I saw [[1|1 bird]]"),

    # complement modifiers
    S("g093", "aru", "There {be:1} {np:1}", [N(1, "gakkou", SUBJ, complement_modifier_ja="zenkoku-no")],
      "There are [[1|schools all over the country]]"),
    S("g094", "miru", "I saw {np:1}", [N(1, "byouin", OBJ, complement_modifier_ja="sekaijuu-no")],
      "I saw [[1|hospitals all over the world]]"),
    S("g095", "miru", "I saw {np:1}", [N(1, "kagu", OBJ, complement_modifier_ja="machijuu-no")],
      "I saw [[1|pieces of furniture all over town]]"),
    S("g096", "suki", "{np:1} like {np:2}",
      [N(1, "gakusei", SUBJ, complement_modifier_ja="zenkoku-no"), N(2, "bi-ru", OBJ)],
      "[[1|Students all over the country]] like [[2|beer]]"),
    S("g097", "kau", "{np:1} bought {np:2}",
      [N(1, "hito", SUBJ, complement_modifier_ja="sekaijuu-no"), N(2, "hasami", OBJ)],
      "[[1|People all over the world]] bought [[2|scissors]]"),

    # mass-countable verbs
    S("g098", "shuushuu", "I collect {np:1}", [N(1, "ke-ki", OBJ)], "I collect [[1|cakes]]"),
    S("g099", "atsumeru", "I gather {np:1}", [N(1, "hana", OBJ)], "I gather [[1|flowers]]"),
    S("g100", "shuushuu", "{np:1} collects {np:2}",
      [N(1, "sensei", SUBJ, definite=True), N(2, "bi-ru", OBJ)],
      "[[1|The teacher]] collects [[2|beer]]"),
    S("g101", "atsumeru", "{np:1} gather {np:2}",
      [N(1, "gakusei", SUBJ, explicit_plural=True), N(2, "jouhou", OBJ)],
      "[[1|Students]] gather [[2|information]]"),
    S("g102", "shuushuu", "I collect {np:1}", [N(1, "hasami", OBJ)], "I collect [[1|scissors]]"),
    S("g103", "shuushuu", "{np:1} collects {np:2}",
      [N(1, "kazoku", SUBJ, determiner_ja="watashi-no"), N(2, "inu", OBJ)],
      "[[1|My family]] collects [[2|dogs]]"),

    # dictionary defaults
    S("g104", "kau", "{np:1} bought {np:2}", [N(1, "sensei", SUBJ), N(2, "houchou", OBJ)],
      "[[1|A teacher]] bought [[2|a knife]]"),
    S("g105", "taberu", "{np:1} ate {np:2}", [N(1, "kodomo", SUBJ, definite=True), N(2, "men", OBJ)],
      "[[1|The child]] ate [[2|noodles]]"),
    S("g106", "nomu", "{np:1} drank {np:2}", [N(1, "isha", SUBJ, definite=True), N(2, "bi-ru", OBJ)],
      "[[1|The doctor]] drank [[2|beer]]"),
    S("g107", "kau", "{np:1} bought {np:2}", [N(1, "kazoku", SUBJ, definite=True), N(2, "kagu", OBJ)],
      "[[1|The family]] bought [[2|furniture]]"),
    S("g108", "kau", "{np:1} bought {np:2}", [N(1, "enjinia", SUBJ), N(2, "hasami", OBJ)],
      "[[1|An engineer]] bought [[2|scissors]]"),
    S("g109", "kau", "{np:1} bought {np:2}", [N(1, "josei", SUBJ, definite=True), N(2, "ifuku", OBJ)],
      "[[1|The woman]] bought [[2|clothes]]"),
    S("g110", "taberu", "{np:1} ate {np:2}", [N(1, "gakusei", SUBJ), N(2, "ringo", OBJ)],
      "[[1|A student]] ate [[2|an apple]]"),
    S("g111", "taberu", "{np:1} ate {np:2}", [N(1, "hito", SUBJ, definite=True), N(2, "tamago", OBJ)],
      "[[1|The person]] ate [[2|an egg]]"),
    S("g112", "miru", "{np:1} saw {np:2}", [N(1, "gakusei", SUBJ, definite=True), N(2, "seifuku", OBJ)],
      "[[1|The student]] saw [[2|a uniform]]"),
    S("g113", None, "{np:1} waited {np:2}", [N(1, "sensei", SUBJ, definite=True), N(2, "jikan")],
      "[[1|The teacher]] waited [[2|an hour]]"),
    S("g114", "aru", "There {be:1} {np:1}", [N(1, "jouhou", SUBJ)], "There is [[1|information]]"),
    S("g115", "aru", "There {be:1} {np:1}", [N(1, "megane", SUBJ)], "There are [[1|glasses]]"),
    S("g116", "aru", "{np:1} {be:1} here", [N(1, "iinkai", SUBJ, definite=True)],
      "[[1|The committee]] is here"),
    S("g117", "taberu", "{np:1} ate {np:2}", [N(1, "neko", SUBJ, definite=True), N(2, "niku", OBJ)],
      "[[1|The cat]] ate [[2|meat]]"),
    S("g118", "nomu", "{np:1} drank {np:2}", [N(1, "otona", SUBJ, explicit_plural=True), N(2, "wain", OBJ)],
      "[[1|Adults]] drank [[2|wine]]"),
    S("g119", "taberu", "{np:1} ate {np:2}", [N(1, "nezumi", SUBJ, definite=True), N(2, "chiizu", OBJ)],
      "[[1|The mouse]] ate [[2|cheese]]"),
    S("g120", "taberu", "{np:1} ate {np:2}",
      [N(1, "tori", SUBJ, explicit_plural=True, definite=True), N(2, "pan", OBJ)],
      "[[1|The birds]] ate [[2|bread]]"),
    S("g121", "motsu", "{np:1} has {np:2}", [N(1, "gakusei", SUBJ, definite=True), N(2, "shukudai", OBJ)],
      "[[1|The student]] has [[2|homework]]"),
    S("g122", "okuru", "{np:1} sent {np:2}", [N(1, "isha", SUBJ, definite=True), N(2, "jogen", OBJ)],
      "[[1|The doctor]] sent [[2|advice]]"),
    S("g123", "nomu", "I drank {np:1}", [N(1, "kouhii", OBJ)], "I drank [[1|coffee]]"),
    S("g124", "kau", "{np:1} bought {np:2}", [N(1, "mure", SUBJ, definite=True), N(2, "basu", OBJ)],
      "[[1|The group]] bought [[2|a bus]]"),
]


def main():
    header = "# Hand-built gold corpus; regenerate with tools/build_gold.py\n"
    OUT.write_text(header + "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in CORPUS), encoding="utf-8")
    print(f"wrote {len(CORPUS)} sentences to {OUT}")


if __name__ == "__main__":
    main()
