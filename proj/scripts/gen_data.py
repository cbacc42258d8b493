#!/usr/bin/env python3
"""Generates the bundled data files under data/.

  verbs.txt            561 interactive-fiction verbs, one per line
  lexicon.tsv          word<TAB>comma-separated tags
  lm_corpus.txt        action sentences for the n-gram model
  validity_corpus.tsv  label<TAB>response text

Output is deterministic. Run from anywhere:  python3 scripts/gen_data.py
"""
import json
import os
import random
import re
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import wordlists as W  # noqa: E402

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "data")
GAMES = os.path.join(ROOT, "games")
NUM_VERBS = 561


def dedupe(seq):
    seen = set()
    out = []
    for x in seq:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def load_games():
    games = []
    for name in sorted(os.listdir(GAMES)):
        if name.endswith(".game"):
            with open(os.path.join(GAMES, name)) as f:
                games.append(json.load(f))
    return games


# ---------------------------------------------------------------- verbs

def build_verbs(games):
    game_verbs = []
    for g in games:
        for o in g["objects"]:
            for vr in o.get("verb_responses", []):
                game_verbs.append(vr["verb"])
    verbs = dedupe(W.CORE_VERBS + [v for v in game_verbs if " " not in v]
                   + W.PHRASAL_VERBS + W.MORE_VERBS)
    if len(verbs) < NUM_VERBS:
        sys.exit("only %d verbs available" % len(verbs))
    return verbs[:NUM_VERBS]


# -------------------------------------------------------------- lexicon

IRREGULAR_PAST = {
    "take": "took", "eat": "ate", "drink": "drank", "wear": "wore",
    "give": "gave", "show": "showed", "throw": "threw", "break": "broke",
    "ring": "rang", "hit": "hit", "cut": "cut", "dig": "dug", "blow": "blew",
    "wind": "wound", "get": "got", "go": "went", "run": "ran", "sit": "sat",
    "stand": "stood", "swim": "swam", "sing": "sang", "sink": "sank",
    "speak": "spoke", "steal": "stole", "strike": "struck", "swing": "swung",
    "tear": "tore", "tell": "told", "think": "thought", "write": "wrote",
    "ride": "rode", "drive": "drove", "fly": "flew", "freeze": "froze",
    "hide": "hid", "hold": "held", "hang": "hung", "lead": "led",
    "leave": "left", "lie": "lay", "make": "made", "put": "put", "read": "read",
    "say": "said", "see": "saw", "sell": "sold", "send": "sent", "shake": "shook",
    "shoot": "shot", "shut": "shut", "sleep": "slept", "slide": "slid",
    "spin": "spun", "spit": "spat", "split": "split", "spread": "spread",
    "stick": "stuck", "sweep": "swept", "bite": "bit", "bind": "bound",
    "bend": "bent", "begin": "began", "build": "built", "buy": "bought",
    "catch": "caught", "choose": "chose", "draw": "drew", "dream": "dreamt",
    "feel": "felt", "fight": "fought", "find": "found", "flee": "fled",
    "forge": "forged", "grind": "ground", "hear": "heard", "kneel": "knelt",
    "lay": "laid", "leap": "leapt", "light": "lit", "quit": "quit",
    "set": "set", "sew": "sewed", "shine": "shone", "sling": "slung",
    "swear": "swore", "teach": "taught", "tread": "trod", "wake": "woke",
    "weave": "wove", "wring": "wrung", "fling": "flung", "beat": "beat",
    "bet": "bet", "do": "did", "have": "had", "pay": "paid",
}


def plural(w):
    if w in W.IRREGULAR_PLURALS:
        return W.IRREGULAR_PLURALS[w]
    if re.search(r"(s|x|z|ch|sh)$", w):
        return w + "es"
    if re.search(r"[^aeiou]y$", w):
        return w[:-1] + "ies"
    return w + "s"


def third_person(w):
    if re.search(r"(s|x|z|ch|sh|o)$", w):
        return w + "es"
    if re.search(r"[^aeiou]y$", w):
        return w[:-1] + "ies"
    return w + "s"


def past(w):
    if w in IRREGULAR_PAST:
        return IRREGULAR_PAST[w]
    if w.endswith("e"):
        return w + "d"
    if re.search(r"[^aeiou]y$", w):
        return w[:-1] + "ied"
    if re.fullmatch(r"[^aeiou]*[aeiou][^aeiouwxy]", w):
        return w + w[-1] + "ed"
    return w + "ed"


def build_lexicon(verbs, games):
    lex = {}

    def tag(word, t):
        word = word.lower()
        if not re.fullmatch(r"[a-z][a-z'-]*", word):
            return
        lex.setdefault(word, set()).add(t)

    directions = {"north", "south", "east", "west", "northeast", "northwest",
                  "southeast", "southwest", "up", "down", "enter", "exit"}
    for n in dedupe(W.NOUNS + W.NOUNS_EXTRA):
        tag(n, "noun")
        tag(plural(n), "noun")
    for a in dedupe(W.ADJECTIVES + W.ADJECTIVES_EXTRA):
        if a in directions:
            continue
        tag(a, "adjective")
        if len(a) <= 5 and re.fullmatch(r"[a-z]+", a) and not a.endswith("ed"):
            base = a[:-1] if a.endswith("e") else a
            if re.search(r"[^aeiou]y$", a):
                base = a[:-1] + "i"
            tag(base + "er", "adjective")
            tag(base + "est", "adjective")
        if a.endswith("le"):
            tag(a[:-1] + "y", "other")
        elif a.endswith("y"):
            tag(a[:-1] + "ily", "other")
        elif not a.endswith("ly"):
            tag(a + "ly", "other")
    for v in dedupe(verbs + W.MORE_VERBS):
        for part in v.split():
            if part in W.PREPOSITIONS:
                continue
            tag(part, "verb")
            tag(third_person(part), "verb")
            tag(past(part), "verb")
    for w in W.DETERMINERS:
        tag(w, "determiner")
    for w in W.PREPOSITIONS:
        tag(w, "preposition")
    for w in W.PRONOUNS:
        tag(w, "pronoun")
    for w in W.OTHER:
        tag(w, "other")
    for d in directions:
        lex[d] = {"other"}
    for w, tags in W.EXTRA_TAGS.items():
        lex[w] = set(tags)
    # Every object name word from the bundled games is a noun or adjective.
    for g in games:
        for o in g["objects"]:
            for name in o["names"]:
                toks = name.split()
                for i, t in enumerate(toks):
                    if t in lex:
                        continue
                    tag(t, "noun" if i == len(toks) - 1 else "adjective")
    return lex


# ------------------------------------------------------------ LM corpus

# Nouns crossed with every verb. Kept near 90 so the corpus lands near 50k.
LM_NOUNS = dedupe("""
door window mailbox leaflet sack garlic bottle case rug lantern lamp sword rope
knife tree bed switch light telephone phone screwdriver toothbrush gown gate
desk key bracket rack coin strongbox box idol plinth bell hook lemon sundial
pouch scale rose fountain chain lever ledger net carp saddle mare feather gong
candle sarcophagus hymnal altar pebble milestone statue furniture oats pile
scroll boulder well torch chest table chair book map egg apple bread water
grating drawer ladder shovel coat hat ring letter note button painting mirror
clock troll cyclops bird fire
""".split())

# Sensible verb/object pairs and their weights.
AFFORD = {
    "open": (30, "door window mailbox sack case strongbox box chest drawer gate "
                 "bottle grating ledger book letter well"),
    "close": (6, "door window mailbox sack case strongbox box chest drawer gate "
                 "bottle grating book"),
    "take": (10, "leaflet garlic bottle lantern lamp sword rope knife telephone "
                 "phone screwdriver toothbrush gown key coin idol bell lemon pouch "
                 "rose chain ledger net saddle feather candle hymnal pebble scroll "
                 "torch book map egg apple bread hat ring letter note coat shovel box"),
    "read": (12, "leaflet ledger scroll milestone sundial book map letter note "
                 "hymnal sign plaque"),
    "light": (10, "torch lamp lantern candle fire"),
    "unlock": (6, "door strongbox chest gate box drawer"),
    "lock": (3, "door strongbox chest gate box drawer"),
    "eat": (6, "garlic lemon apple bread egg oats"),
    "drink": (5, "water"),
    "wear": (8, "gown coat hat ring"),
    "search": (8, "furniture oats desk rug drawer pile chest box bed sack well"),
    "pull": (6, "lever rope chain switch"),
    "push": (5, "button switch lever boulder door"),
    "feed": (5, "carp mare bird troll"),
    "strike": (4, "gong bell match"),
    "ring": (5, "bell gong"),
    "climb": (5, "tree ladder rope well"),
    "touch": (3, "fountain statue altar mirror"),
    "move": (4, "rug boulder desk table chair"),
    "turn": (3, "switch lever key"),
    "break": (2, "window bottle mirror"),
    "wave": (3, "sword torch"),
    "kill": (3, "troll cyclops"),
    "attack": (3, "troll cyclops"),
    "give": (3, "garlic coin lemon"),
    "play": (2, "bell gong"),
    "fill": (3, "bottle"),
    "wind": (2, "clock"),
    "shake": (2, "bottle box"),
}
# Each phrasal verb gets a few objects of its own.
AFFORD_PHRASAL = {
    "turn on": (6, "lamp lantern light switch torch"),
    "turn off": (3, "lamp lantern light switch torch"),
    "switch on": (3, "lamp lantern light torch"),
    "pick up": (4, "key coin rope knife sword"),
    "look at": (3, "painting mirror statue map"),
    "get out of": (2, "bed"),
    "knock on": (2, "door"),
}
# Verb-object-preposition-object templates and their sensible pairs.
TEMPLATES = [
    ("put", "in", 2, [("leaflet", "mailbox"), ("coin", "pouch"), ("garlic", "sack"),
                      ("key", "box"), ("idol", "case"), ("sword", "case"),
                      ("feather", "box"), ("scroll", "box")]),
    ("open", "with", 1, [("door", "key"), ("box", "knife"), ("chest", "key"),
                         ("strongbox", "key")]),
    ("unlock", "with", 3, [("door", "key"), ("strongbox", "key"), ("chest", "key"),
                           ("gate", "key"), ("box", "key")]),
    ("give", "to", 1, [("garlic", "troll"), ("coin", "troll"), ("lemon", "mare")]),
    ("attack", "with", 1, [("troll", "sword"), ("cyclops", "sword"), ("troll", "knife")]),
    ("tie", "to", 1, [("rope", "tree"), ("rope", "hook"), ("chain", "hook")]),
    ("pour", "on", 1, [("water", "fire")]),
    ("show", "to", 1, [("coin", "troll"), ("idol", "cyclops")]),
    ("ask", "about", 1, [("troll", "key"), ("cyclops", "idol")]),
    ("use", "on", 1, [("key", "door"), ("key", "strongbox"), ("knife", "rope")]),
]
# Scale applied to every AFFORD weight for the bare and "the" forms.
BARE_SCALE = 3
THE_SCALE = 2


def build_lm_corpus(verbs):
    lines = []
    for v in verbs:
        for n in LM_NOUNS:
            lines.append("%s %s" % (v, n))
    for table in (AFFORD, AFFORD_PHRASAL):
        for v, (w, objs) in table.items():
            for n in objs.split():
                lines += ["%s %s" % (v, n)] * (w * BARE_SCALE)
                lines += ["%s the %s" % (v, n)] * (w * THE_SCALE)
    for v, p, w, pairs in TEMPLATES:
        for x, y in pairs:
            lines += ["%s %s %s %s" % (v, x, p, y)] * w
    # Single-word commands.
    for word, w in (("look", 20), ("inventory", 10), ("north", 5), ("south", 5),
                    ("east", 5), ("west", 5), ("up", 5), ("down", 5),
                    ("wait", 3), ("yes", 3), ("no", 3), ("restart", 1)):
        lines += [word] * w
    lines += ["take all"] * 10
    rng = random.Random(1729)
    rng.shuffle(lines)
    return lines


# ------------------------------------------------------- validity corpus

RESERVED = {
    # Held-out reference sentences; never placed in the training data.
    "i didn't understand that sentence.",
    "you can't go that way.",
    "you can't use multiple objects with that verb.",
    "you try to push past, but vines block your way.",
    "i don't know the word xyzzy.",
    "even with a lamp, you would not chance these stairs in the darkness.",
    "the gentle tapping sounds again.",
    "help! you hurtle through the cave opening!",
    "the grating opens.",
    "the cyclops seems somewhat agitated.",
}

OBJS = ("door window mailbox leaflet sack bottle lantern lamp sword rope knife "
        "box chest key coin idol bell candle torch book map painting mirror "
        "statue ladder drawer cabinet table chair scroll feather pebble gown "
        "hat coat ring letter note vase jar basket crate shield helmet").split()
CREATURES = "troll thief dragon guard ogre goblin dwarf wizard parrot dog".split()
ADJS = ("small old rusty brass wooden heavy dusty shiny broken large iron golden "
        "silver ancient battered tiny").split()
SOUNDS = "knocking ringing humming scratching whistling creaking rumbling".split()
DIRS = ("north south east west northeast northwest southeast southwest up down").split()
FILLER_WORDS = ("plugh frotz gnusto rezrov blorb florp quux zorkmid wibble "
                "glorf snark yoink flibber grommet vorpal").split()
VERBS_FOR_FAIL = ("open close take eat read push pull turn climb move burn cut "
                  "wear drink light unlock break shake").split()

FAILURE_FIXED = """
I beg your pardon?
That's not a verb I recognise.
You can't see any such thing.
It is pitch black. You are likely to be eaten by a grue.
It's too dark to see.
You already have that.
That's fixed in place.
That's hardly portable.
You're not carrying that.
You aren't holding that.
Nothing happens.
Nothing obvious happens.
That doesn't seem to do anything.
You can't do that.
That would achieve nothing.
Violence isn't the answer to this one.
That's not important.
Don't be silly.
You cannot go that way.
You can't go in that direction.
There is a wall in the way.
I didn't understand that.
I only understood you as far as wanting to look.
You can't use more than one object with that verb.
You can only refer to one object with that verb.
Multiple objects aren't allowed with that verb.
You are empty-handed.
There is nothing here to take.
There's nothing here you can take.
You find nothing of interest.
You find nothing else of interest.
Please answer yes or no.
You hesitate.
That's plainly inedible.
You can't drink that.
That doesn't fit the lock.
You don't have the right key.
It's already open.
It's already closed.
It's already on.
It's already off.
It's locked.
That's not something you can open.
That's not something you can close.
That's not something you can switch.
That's not something you can lock.
That can't contain things.
You can't put something inside itself.
You are not in bed.
You'll need to be holding it first.
The door is boarded and you can't remove the boards.
The door is nailed shut.
The window is closed.
The iron door is closed.
You'll have to get out of bed first.
Saving is not supported here.
Restoring is not supported here.
You can't reach that from here.
That isn't available.
You can't see that here.
There is no room for that.
Your hands are full.
You are carrying too much already.
You can't see anything in the dark.
It's far too dark to do that.
You don't see that here.
That verb needs an object.
What do you want to take?
What do you want to open?
You seem to want to talk to someone, but I can't see whom.
Nobody answers.
There's no reply.
That's not something you can eat.
You can't climb that.
You can't enter that.
You can't wear that.
That seems to be a scenery object.
That isn't something you can search.
The oats slip through your fingers.
That was a rhetorical question.
Please answer RESTART, RESTORE or QUIT.
That's not something you can unlock.
It's already unlocked.
It's already locked.
It is pitch black.
It is pitch dark, and you can't see a thing.
It is now pitch black.
It is too dark to see anything here.
You can't see a thing in this darkness.
""".strip().split("\n")

SUCCESS_FIXED = """
Taken.
Dropped.
Opened.
Closed.
Done.
Unlocked.
Locked.
Time passes.
Ok.
Okay, done.
You are carrying:
Thank you very much. That really hit the spot.
You feel much better.
The room is brightly lit now.
Your score has just gone up by five points.
Your score has just gone up by one point.
Oh, no! You have walked into the slavering fangs of a lurking grue!
*** You have died ***
Would you like to RESTART, RESTORE a saved game or QUIT?
Do you want to climb down the rope? (yes or no)
Very difficult, but you manage it. The room is still spinning.
You are now wearing your gown. You feel a little less terrible.
Good start to the day. Pity it's going to be the worst one of your life. The light is now on.
Luckily, this is large enough for you to get hold of. You notice something in the pocket.
A voice booms out: "Welcome, traveller!"
The ground shakes beneath your feet.
Help! The floor gives way and you tumble into a pit!
Help! You slide helplessly down the chute!
Suddenly the lights go out.
A hidden panel slides open.
There is a click and a rumble from somewhere below.
The bridge lowers with a groan.
The portcullis rises slowly.
The elevator lurches upward.
The machine whirs into life.
Something rustles in the undergrowth.
A bell rings somewhere in the distance.
You hear footsteps approaching.
The water level rises.
The ice melts into a puddle.
Smoke billows from the chimney.
The birds scatter into the sky.
Thanks for playing.
Thank you for playing.
Closed.
Locked.
Unlocked.
Switched on.
Switched off.
""".strip().split("\n")


def failure_templates(rng):
    out = []
    for x in OBJS:
        a = rng.choice(ADJS)
        v = rng.choice(VERBS_FOR_FAIL)
        out += [
            "You can't see any %s here." % x,
            "The %s is locked." % x,
            "The %s is closed." % x,
            "The %s is already open." % x,
            "The %s is already closed." % x,
            "You can't %s the %s." % (v, x),
            "You don't have the %s." % x,
            "You're not carrying the %s." % x,
            "The %s won't budge." % x,
            "The %s is fixed in place." % x,
            "You already have the %s." % x,
            "There's nothing written on the %s." % x,
            "What do you want to unlock the %s with?" % x,
            "What do you want to %s the %s with?" % (v, x),
            "The %s doesn't fit." % x,
            "You'll have to open the %s first." % x,
            "You need to be holding the %s first." % x,
            "The %s %s is too heavy to lift." % (a, x),
            "You can't %s the %s %s." % (v, a, x),
            "Trying to %s the %s achieves nothing." % (v, x),
            "The %s doesn't seem to want to %s." % (x, v),
            "You reach for the %s, but the room spins away." % x,
            "The %s slips through your fumbling fingers." % x,
        ]
    for w in FILLER_WORDS + OBJS[:20]:
        out.append("I don't know the word %s." % w)
        out.append('I don\'t know the word "%s".' % w)
        out.append("You used the word %s in a way that I don't understand." % w)
    for v in VERBS_FOR_FAIL:
        out.append("What do you want to %s?" % v)
        out.append("That's not something you can %s." % v)
        out.append("I only understood you as far as wanting to %s." % v)
        out.append("You can't %s that." % v)
    for d in DIRS:
        out.append("There is no way to go %s." % d)
        out.append("You can't go %s from here." % d)
        out.append("The way %s is blocked." % d)
    for verb in "climb squeeze force edge wriggle shove crawl".split():
        for obstacle in ("the brambles", "thick thorns", "the rubble", "fallen rocks",
                         "the branches", "tangled roots"):
            out.append("You try to %s past, but %s block your way." % (verb, obstacle))
    for verb in "grab seize lunge for snatch".split():
        out.append("You %s at it, but the floor tilts nauseatingly away." % verb)
        out.append("You %s at it, but miss completely." % verb)
    for x in "floor carpet rug ground flagstones".split():
        out.append("It slips through your fumbling fingers and hits the %s with a crash." % x)
    out.append("You lunge for it, but the room spins nauseatingly away.")
    out.append("It slips through your fumbling fingers and hits the carpet with a nerve-shattering bang.")
    return out


def success_templates(rng):
    out = []
    for x in OBJS:
        a = rng.choice(ADJS)
        b = rng.choice(ADJS)
        y = rng.choice(OBJS)
        out += [
            "You take the %s." % x,
            "You pick up the %s." % x,
            "The %s swings open." % x,
            "The %s creaks open." % x,
            "The %s slides open." % x,
            "The %s is now open." % x,
            "Opening the %s reveals a %s." % (x, y),
            "You open the %s." % x,
            "The %s is now on." % x,
            "The %s is now closed." % x,
            "You close the %s." % x,
            "You lock the %s." % x,
            "You unlock the %s." % x,
            "The %s is now locked." % x,
            "The %s is now unlocked." % x,
            "The %s is now off." % x,
            "The %s flickers into life." % x,
            "You see nothing special about the %s." % x,
            "It is a %s %s." % (a, x),
            "The %s is %s and %s." % (x, a, b),
            "A %s %s with a %s %s." % (a, x, b, y),
            "You put the %s in the %s." % (x, y),
            "You give the %s a good shake." % x,
            "You wave the %s about." % x,
            "The %s glows with a %s light." % (x, a),
            "Inside the %s you find a %s." % (x, y),
            "On the %s is a %s %s." % (x, a, y),
            "  a %s %s" % (a, x),
        ]
        if x != "grating":
            out.append("The %s opens." % x)
    for c in CREATURES:
        for mood in ("annoyed", "angry", "irritated", "nervous", "upset", "restless"):
            for deg in ("somewhat", "rather", "very"):
                out.append("The %s seems %s %s." % (c, deg, mood))
        out.append("The %s ignores you." % c)
        out.append("The %s grunts and turns away." % c)
        out.append("The %s takes the gift and grins." % c)
        out.append("The %s lunges at you with a snarl." % c)
    for s in SOUNDS:
        for adj in ("faint", "distant", "soft", "loud", "muffled"):
            out.append("The %s %s sounds again." % (adj, s))
            out.append("A %s %s comes from somewhere nearby." % (adj, s))
    for verb in ("tumble", "slide", "plunge", "fall", "hurtle"):
        for place in ("the trapdoor", "the chute", "the hole", "the crack", "the gap"):
            out.append("Help! You %s through %s!" % (verb, place))
            out.append("You %s down %s into darkness." % (verb, place))
    for n in range(1, 60, 3):
        out.append("Your score is %d of a possible %d, in %d moves." % (n, 50, n * 3))
    return out


def game_texts(games):
    succ, fail = [], []
    fail_markers = ("lunge", "slips through", "have to", "is closed", "is locked",
                    "not in bed", "nothing else", "hesitate", "slip through",
                    "need to be holding", "can't", "nailed shut", "boarded")
    for g in games:
        for r in g["rooms"]:
            succ.append(r["description"])
            succ.append(r["name"])
            for ex in r.get("exits", {}).values():
                if isinstance(ex, dict) and "blocked" in ex:
                    fail.append(ex["blocked"])
        for o in g["objects"]:
            succ.append(o["examine_text"])
            for vr in o.get("verb_responses", []):
                text = vr["response"]
                (fail if any(m in text for m in fail_markers) else succ).append(text)
                if "else" in vr:
                    fail.append(vr["else"])
        for p in g.get("prompts", []):
            succ.append(p["text"])
            for k in ("yes", "no"):
                text = p[k]["response"]
                (fail if any(m in text.lower() for m in fail_markers) else succ).append(text)
        for texts in g.get("flavor", {}).values():
            for ft in texts:
                succ.append(ft["text"])
    return succ, fail


def build_validity(games):
    rng = random.Random(4242)
    gs, gf = game_texts(games)
    succ = SUCCESS_FIXED + success_templates(rng) + gs
    fail = FAILURE_FIXED + failure_templates(rng) + gf
    rows = []
    seen = set()
    for label, texts in (("success", succ), ("failure", fail)):
        for t in texts:
            t = t.strip()
            key = t.lower()
            if not t or key in RESERVED or key in seen:
                continue
            seen.add(key)
            rows.append((label, t))
    rng.shuffle(rows)
    return rows


# --------------------------------------------------------------- checks

def stupid_backoff_logprob(counts, total, vocab, order, phrase):
    import math
    toks = ["<s>"] * (order - 1) + phrase.split()
    lp = 0.0
    for i in range(order - 1, len(toks)):
        factor = 1.0
        score = None
        for n in range(order, 0, -1):
            ctx = tuple(toks[i - n + 1:i])
            gram = ctx + (toks[i],)
            c = counts.get(gram, 0)
            if c > 0:
                denom = counts[ctx] if ctx else total
                score = factor * c / denom
                break
            factor *= 0.4
        if score is None:
            score = 0.4 ** (order - 1) / (vocab + 1)
        lp += math.log(score)
    return lp


def check_lm(lines, verbs):
    order = 5
    counts = {}
    total = 0
    vocab = set()
    for line in lines:
        toks = ["<s>"] * (order - 1) + line.split() + ["</s>"]
        for t in line.split() + ["</s>"]:
            vocab.add(t)
        total += len(line.split()) + 1
        for i in range(order - 1, len(toks)):
            for n in range(1, order + 1):
                gram = tuple(toks[i - n + 1:i + 1])
                counts[gram] = counts.get(gram, 0) + 1
                # contexts made only of padding are counted per sentence
        for n in range(1, order):
            counts[tuple(["<s>"] * n)] = counts.get(tuple(["<s>"] * n), 0) + 1
    lp = lambda p: stupid_backoff_logprob(counts, total, len(vocab), order, p)
    a, b, c = lp("open the door"), lp("open the torch"), lp("light the door")
    print("open the door %.3f  open the torch %.3f  light the door %.3f" % (a, b, c))
    assert a > b > c, "LM ordering violated"


def main():
    games = load_games()
    verbs = build_verbs(games)
    lex = build_lexicon(verbs, games)
    lm = build_lm_corpus(verbs)
    validity = build_validity(games)
    os.makedirs(DATA, exist_ok=True)
    with open(os.path.join(DATA, "verbs.txt"), "w") as f:
        f.write("\n".join(verbs) + "\n")
    with open(os.path.join(DATA, "lexicon.tsv"), "w") as f:
        for w in sorted(lex):
            f.write("%s\t%s\n" % (w, ",".join(sorted(lex[w]))))
    with open(os.path.join(DATA, "lm_corpus.txt"), "w") as f:
        f.write("\n".join(lm) + "\n")
    with open(os.path.join(DATA, "validity_corpus.tsv"), "w") as f:
        for label, text in validity:
            f.write("%s\t%s\n" % (label, text))
    n_s = sum(1 for l, _ in validity if l == "success")
    print("verbs %d  lexicon %d  lm %d  validity %d (%d success, %d failure)"
          % (len(verbs), len(lex), len(lm), len(validity), n_s, len(validity) - n_s))
    if "--check" in sys.argv:
        check_lm(lm, verbs)


if __name__ == "__main__":
    main()
