"""Curated word lists used by gen_data.py."""

# Verbs in priority order. The first block must stay at the front: these
# are the verbs the bundled games and the engine understand.
CORE_VERBS = """
take drop open close examine read search eat drink wear pull push feed strike touch
climb unlock lock put give show ask tie pour attack use light extinguish enter
throw break move turn shake wave knock ring listen smell taste kiss hit kick
burn cut dig fill empty insert remove wind blow inflate deflate unfold fold
""".split()

MORE_VERBS = """
abandon abduct absorb accept accuse acquire activate add address adjust admire
admit adopt advance advise aim alert align allow amuse anchor animate annoy
answer apologize appear applaud apply approach argue arm arrange arrest assemble
assist attach awake awaken bake balance ban bandage bang bar bargain barricade
bash bathe batter beat beckon beg begin behead believe bellow bend bet bind bite
blast bleed bless blind blink block board boil bolt bomb bounce bow box brace
braid brandish breathe bribe brush bucket buckle build bump bury button buy
calibrate call calm camouflage capture carry carve cast catch chain chalk change
charge chase chat cheat check cheer chew chip chisel choke chop clap clasp clean
clear click clip clutch coat coil collapse collect comb command complain compose
compress concentrate confess confront connect consult consume contact cook cool
copy cough count cover crack crank crawl creep cross crouch crumble crush cry
cuddle cure curse dance dangle dare darn deactivate deal decide decode decorate
decrypt defend delete deliver demand demolish deny depress descend destroy detach
dial dip disarm disassemble disconnect discover disguise dismantle dismount
display dissolve distract disturb dive divide dodge donate douse drag drain draw
dream dress drill drip drive duck dump dust eject embrace empower enchant encode
engrave enlarge equip erase escape evade exchange excite exhale exit expand
explode explore extend extract fan fasten fax feel fence fetch fiddle fight file
find fire fish fix flap flash flatten flee flick flip float flood flush fly
focus follow force forge free freeze frighten fry fuel gamble gather gaze get
giggle glue gnaw go grab grasp grease greet grind grip growl grunt guard guess
hack hail hammer hang harvest hatch haul heal hear heat heave help hide hire
hitch hold hook hop hop hug hum hunt hurl hurry ignite ignore illuminate imitate
inhale insult interrogate introduce investigate iron jab jam jiggle join joke
juggle jump kill kneel knit knot label lace ladle laugh launch lay lead lean
leap learn leave lick lie lift listen load loosen lower magnify make march mark
massage measure meditate melt mend milk mix moisten mop mount mourn mow
nail nod note nudge observe offer oil operate order paddle paint pan pat pay
peel peek peer perform pet phone photograph pick pierce pinch pilot plant play
plead plug plunge point poison poke polish pop pound pray press prick prod
program promise prop protect pry pump punch puncture purchase push pet quaff
question quit race raise rake ram rattle reach recite record reflect refuse
relax release remember repair repeat reply report rescue reset rest restrain
retreat retrieve return reveal rewind ride rinse rip roast rock roll rotate rub
run rush sail salute save saw say scare scatter scold scoop scrape scratch scream
screw scrub seal sell send set sew shave shear shelter shift shine shoot shout
shove shovel shut sift sign signal sing sink sip sit sketch ski skip slap sleep
slice slide sling slip smash smear smile smoke snap sneak sniff snip snore
soak solder solve sort speak spill spin spit splash split spray spread squash
squeeze squirt stab stack stamp stand stare start steal steer step stick stir
stitch stop store stretch stroke study stuff stun submerge suck summon supply
surrender swallow swap sway swear sweep swim swing swipe switch tackle talk
tap tape taunt tear tease telephone tell test thank thread tickle tighten tilt
time tip toast toss trace track trade train transfer trap travel tread trim
trip tug tune twist type unbolt unbuckle unbutton uncover undo undress unhook
unlace unload unplug unscrew untie unwrap unwind vault wade wait wake walk wash
water weigh weld whip whisper whistle wield wipe wish worship wrap wrestle write
yank yell zap bless chant conjure curtsey dig embrace flick frisk gesture glance
hail hoist jostle juggle lasso lure mimic navigate nibble nuzzle overturn pester
pilfer pluck pocket ponder prise pummel quench ransack rattle rebuild recharge
reel refill rend ripen rouse rummage salvage sharpen shatter shred sharpen shuffle
siphon skewer slash slurp smother sniff spear spike sprinkle stoke strangle strum
swat tame taste thaw thump topple trample tumble unearth unfurl unroll unseal
uproot vanquish ventilate wiggle winch wring yodel
""".split()

PHRASAL_VERBS = ["turn on", "turn off", "pick up", "look at", "get out of",
                 "switch on", "switch off", "put down", "look under",
                 "look behind", "climb up", "climb down", "get in",
                 "lie down", "stand up", "blow out", "knock on",
                 "drink from", "talk to", "listen to"]

# Nouns: common interactive-fiction objects, scenery and places.
NOUNS = """
mailbox leaflet door house window barrel table sack garlic clove bottle case rug
lantern lamp sword rope knife tree bed switch light telephone phone screwdriver
toothbrush gown daisy flowerbed gate hedgerow hedge hawthorn desk key bracket rack
cask coin strongbox box idol plinth rune bell hook lemon sundial dial pouch scale
rose fountain chain lever ledger book shelf net carp fish saddle mare horse
feather gong candle sarcophagus hymnal altar pebble milestone stone statue
furniture oats pile scroll boulder well torch chest grating cyclops troll thief
egg nest jewel diamond emerald ruby sapphire pearl crown sceptre trident coffin
skull bone painting portrait mirror clock vase jar jug cup mug plate bowl spoon
fork pan pot kettle stove oven fireplace chimney hearth log wood axe hammer
saw shovel spade pick pickaxe crowbar wrench pliers drill nail screw bolt nut
wire cable battery button dial keypad panel screen computer terminal printer
radio television camera film photograph map compass chart globe letter note
card envelope stamp parcel package newspaper magazine diary journal notebook
pencil pen ink quill paper parchment page poster sign plaque inscription
carpet curtain blanket pillow sheet towel cloth rag coat cloak jacket shirt
hat helmet boot shoe glove sock belt ring necklace bracelet amulet medallion
locket badge watch glasses spectacles mask shield armour armor dagger spear bow
arrow quiver crossbow gun pistol rifle bullet cannon sling whip club staff wand
rod orb crystal gem gold silver brass bronze copper iron steel lead tin
bread cheese apple banana orange cake pie sandwich meat fish egg carrot potato
onion mushroom berry nut water wine beer ale milk juice tea coffee potion
elixir medicine pill bandage syringe vial flask canteen bucket basket bag
backpack rucksack satchel purse wallet pocket briefcase suitcase trunk crate
cabinet cupboard closet wardrobe drawer dresser shelf bookcase bench chair stool
sofa couch throne cushion lectern pew podium pedestal column pillar arch beam
rafter ladder stair staircase step stairway ramp bridge tunnel passage corridor
hall hallway room chamber cellar attic basement kitchen bedroom bathroom parlor
library study office vault dungeon cell prison tower turret wall floor ceiling
roof trapdoor hatch grate vent pipe tap faucet sink bath tub toilet shower
basin washbasin bucket hose pump valve tank boiler engine machine motor gear
wheel axle pulley crank winch lift elevator cage fence post pole stick branch
twig leaf flower grass bush shrub vine moss fern mushroom weed root seed
river stream brook lake pond sea ocean beach shore sand rock cliff cave cavern
mountain hill valley canyon gorge ravine forest wood jungle swamp marsh bog
field meadow garden orchard farm barn stable shed hut cabin cottage castle
palace temple church chapel shrine tomb crypt grave graveyard cemetery ruin
road path trail track street lane alley square plaza market shop store inn
tavern bar counter till register safe lock keyhole padlock handle knob hinge
latch bolt chain rope string thread yarn needle pin brooch clasp buckle strap
lid cap cork stopper plug cover wrapper label tag sticker tape glue paint brush
canvas easel sculpture carving figurine doll toy ball puppet kite balloon drum
flute horn trumpet violin guitar piano harp organ whistle bugle lute
dragon troll goblin orc elf dwarf gnome wizard witch ghost spirit demon angel
monster beast wolf bear lion tiger snake spider rat mouse bat bird owl crow
raven eagle hawk parrot pigeon dove chicken duck goose swan frog toad fish shark
whale dolphin crab lobster worm beetle ant bee wasp fly butterfly moth cat dog
puppy kitten cow pig sheep goat donkey mule camel elephant monkey ape guard
soldier knight king queen prince princess priest monk nun merchant shopkeeper
farmer fisherman sailor pirate captain doctor nurse servant butler maid cook
child boy girl man woman baby stranger traveller beggar hermit sage oracle
robot android machine computer alien
sun moon star sky cloud rain snow ice fog mist wind storm thunder lightning
fire flame smoke ash coal ember spark steam dust dirt mud clay sand gravel
oil grease wax soap salt sugar flour spice pepper honey jam butter
grue carving sack mat doormat welcome slot coin token ticket pass permit
blueprint plan recipe formula spell charm talisman totem relic artifact
tablet slab altar font basin bowl chalice goblet cauldron urn vase pot
lens prism magnifier telescope microscope binoculars periscope
matchbook match lighter tinderbox flint candlestick candelabra chandelier
sconce lantern beacon lighthouse buoy boat raft canoe oar paddle sail mast
anchor deck hull cabin porthole helm rudder keel ship dinghy
tent sleeping lamp flashlight torch
chirping song bird birdsong music noise sound voice whisper footstep
floorboard plank board panel tile brick mortar stonework masonry
buttress gargoyle spire dome bell belfry clocktower sundial
""".split()

# Nouns whose plural is irregular or should not be generated.
IRREGULAR_PLURALS = {
    "knife": "knives", "shelf": "shelves", "wolf": "wolves", "leaf": "leaves",
    "man": "men", "woman": "women", "child": "children", "mouse": "mice",
    "goose": "geese", "thief": "thieves", "elf": "elves", "dwarf": "dwarves",
    "tooth": "teeth", "foot": "feet", "staff": "staves", "loaf": "loaves",
    "calf": "calves", "half": "halves", "sheep": "sheep", "fish": "fish",
    "oats": "oats", "armour": "armour", "armor": "armor", "grass": "grasses",
    "glasses": "glasses", "spectacles": "spectacles", "binoculars": "binoculars",
    "furniture": "furniture", "music": "music", "mud": "mud", "dust": "dust",
    "sand": "sand", "flour": "flour", "sugar": "sugar", "honey": "honey",
    "butter": "butter", "moss": "mosses", "cyclops": "cyclopes",
}

ADJECTIVES = """
small large big little tiny huge enormous giant great tall short long wide
narrow thin thick fat heavy light dark bright dim pale deep shallow high low
old new ancient modern young fresh stale rotten ripe raw cooked hot cold warm
cool frozen wet dry damp moist soggy muddy dusty dirty clean filthy shiny dull
glowing gleaming glittering sparkling rusty rusted broken cracked shattered
smashed bent twisted torn ragged tattered frayed worn faded battered dented
scratched chipped polished smooth rough soft hard sharp blunt pointed round
square flat curved crooked straight open closed shut locked unlocked empty full
hollow solid liquid wooden stone iron steel brass bronze copper golden silver
gold leaden tin glass crystal plastic paper leather cloth woollen silk velvet
cotton linen canvas rubber marble granite brick ceramic porcelain clay
red orange yellow green blue purple violet pink brown black white grey gray
crimson scarlet golden amber emerald azure ivory ebony tan beige
strange odd weird curious mysterious magic magical enchanted cursed holy sacred
evil wicked nasty vicious fierce savage wild tame gentle kind friendly hostile
angry sad happy sleepy hungry thirsty tired weary lonely quiet silent loud noisy
gothic oriental elvish dwarvish colonial victorian rustic
advertising boarded barred nailed painted carved engraved inlaid studded
ornate plain simple fancy elegant beautiful ugly pretty handsome grotesque
hideous horrible terrible wonderful marvellous splendid grand humble shabby
cheap expensive valuable precious worthless useless useful important secret
hidden visible invisible obvious subtle faint strong weak powerful feeble
safe dangerous deadly poisonous toxic harmless fragile sturdy stout flimsy
rickety wobbly steady stable loose tight slack taut sticky slippery slimy
greasy oily waxy fuzzy furry hairy bald feathered scaly spiky thorny prickly
leafy grassy mossy sandy rocky stony muddy icy snowy rainy windy foggy misty
sunny cloudy stormy dark shadowy gloomy murky foul fragrant smelly stinking
sweet sour bitter salty spicy bland tasty delicious disgusting
north south east west northern southern eastern western upper lower inner outer
front back rear side middle central left right top bottom first second third
last final main only other next previous distant nearby far near remote
ajar lit unlit electric mechanical automatic manual portable fixed
sleek rugged vast cramped spacious cosy cozy airy stuffy musty mouldy moldy
overgrown tangled abandoned deserted empty crowded busy lively peaceful
flathead phillips cordless wireless digital analog
steep gentle sheer jagged craggy sloping winding twisting
frosty glazed sheltered trampled whitewashed cobbled paved
lumpy tatty squat idle smoking ringing drooping
""".split()

DETERMINERS = """a an the this that these those some any each every no your my his
her its our their another either neither""".split()

PREPOSITIONS = """with in into on onto to about at under from inside through of
by for over above below beneath beside behind between among across along
around against toward towards upon within without near off out up down past
beyond underneath outside throughout during before after since until""".split()

PRONOUNS = """i me you he him she it we us they them myself yourself himself
herself itself ourselves themselves mine yours hers ours theirs who whom what
which whoever whatever something anything nothing everything someone anyone
everyone nobody somebody""".split()

OTHER = """is are was were be been being am has have had do does did will would
shall should can could may might must and or but nor so yet if then than as
because while although though when where why how not very too also just only
here there now again ever never always often sometimes soon already still even
quite rather almost nearly perhaps maybe yes no please thanks hello goodbye
northeast northwest southeast southwest enter exit n s e w ne nw se sw u d
one two three four five six seven eight nine ten eleven twelve twenty hundred
thousand first once twice all both few many much more most less least several
such own same away back forth ahead aside apart together somewhere anywhere
nowhere everywhere inside outside upstairs downstairs upward downward
slightly extremely steadily recently clearly faintly sadly untidily lazily
quietly crosswise hardly""".split()

# Game-text words that must be present with a specific tag set.
EXTRA_TAGS = {
    "chirping": {"noun"}, "song": {"noun"}, "bird": {"noun"},
    "song-bird": {"noun"}, "gown": {"noun"}, "dressing": {"noun", "adjective"},
    "hear": {"verb"}, "winds": {"verb", "noun"}, "leads": {"verb", "noun"},
    "lies": {"verb", "noun"}, "runs": {"verb", "noun"}, "stands": {"verb", "noun"},
    "covers": {"verb", "noun"}, "hangs": {"verb"}, "appears": {"verb"},
    "seems": {"verb"}, "sits": {"verb"}, "grows": {"verb"}, "leans": {"verb"},
    "smells": {"verb", "noun"}, "drips": {"verb", "noun"}, "curves": {"verb", "noun"},
    "descends": {"verb"}, "climbs": {"verb", "noun"}, "continues": {"verb"},
    "stretches": {"verb", "noun"}, "bakes": {"verb"}, "marks": {"verb", "noun"},
    "spills": {"verb", "noun"}, "shimmers": {"verb"}, "pokes": {"verb"},
    "rests": {"verb", "noun"}, "watches": {"verb", "noun"}, "holds": {"verb", "noun"},
    "invites": {"verb"}, "lets": {"verb"}, "goes": {"verb"}, "face": {"noun", "verb"},
    "surrounds": {"verb", "noun"}, "dangles": {"verb"}, "lie": {"verb"},
    "glimpse": {"verb", "noun"}, "lurking": {"adjective"}, "slavering": {"adjective"},
}

# Everyday nouns beyond the interactive-fiction core.
NOUNS_EXTRA = """
account acid acorn actor address advice age agent air airport alarm album
alley amount anger angle animal ankle answer antenna anvil apartment apron
area argument arm army arrangement art article aunt author autumn avenue award
baby bacon badger baggage baker balcony ballroom band bank banner barrel
barrier base basement bath battle bay beak bean beard bedroom beef beetle
beginning behavior bench berry bicycle bill bin birth biscuit bite blade
blanket blaze blood blossom blouse board body bomb bonnet border bottom boulder
boundary branch brandy breakfast breath breeze bride brick bridge brother
bubble bucket budget buffalo bug building bulb bull bundle bunker burglar
burrow business butcher cabbage cactus cafe calendar camp canal candy cap
capital car caravan cargo carpenter carriage cart cartoon castle cattle cave
cellar cement center century cereal chain chalk champion chance channel chapter
character charcoal cheek chef cherry chest chicken chief chin chip chisel
chocolate choir church cigar cinema circle circus citizen city claw clerk
climate clinic clothing clown club clue coach coast coconut collar college
colony colour color column comb comet committee company concert condition cone
contract cord corn corner cottage cotton cough country county courage course
court cousin cow cradle crayon cream creature creek crew cricket crime crop
crowd cruise crumb crust cub cucumber cupboard curtain curve cushion customer
dam dance danger daughter dawn day deal death debt decision deer degree den
dentist department desert design desire detail detective diamond dictionary
dinner direction disease dish distance ditch doctor document donkey doorbell
doorway dozen dragonfly drain drawing dream dress drink driver drop drug dune
dusk duty eagle ear earth edge education effect elbow election electricity
emperor employee end enemy energy engineer entrance envelope error escape
evening event examination example exercise expert eye fabric fact factory
fairy family fan farmer father fault favour fear feast feeling festival fever
fiddle figure finger finish fireman flag flame flashlight fleet flight floor
flower fog folder food foot football forehead fork fortune fox frame freedom
friend fruit fuel fur gallery game gap garage garbage garlic gas gate general
gentleman ghost gift ginger giraffe glass glue goal goat governor grain
grandfather grandmother grape grapefruit grasshopper gravel gravy greenhouse
grill grocery group guest guide guitar gum gutter habit hair haircut hall ham
hammock hand handkerchief harbor harbour hardware harp haste hay head health
heap heart heat hedgehog heel height helicopter hen herb hero hill hip history
hobby hole holiday home honey hood hoof hope horizon hospital host hotel hour
hurricane husband hut hydrant ice icicle idea illness image inch industry
information injury insect instrument interest invention iron island item jail
jar jeans jelly jewel job joke journey judge jungle kangaroo kettle kid
kingdom kitchen kitten knee knot knowledge laboratory lace lad lady lake lamb
land language lap laundry lawn lawyer layer leader lesson level library
license lid life lily limb line linen lion lip liquid list lizard loaf lobby
lock locomotive lodge loft loop lorry loss lot luggage lunch lung machine
magician magnet mailman manager mane manor maple marble market marriage mask
mast match material meadow meal measure medal meeting melody member memory
menu mess message metal meter middle midnight mile mill mind mine minute
mistake mitten mixture model mole money monster month monument mood morning
mosquito mother motorcycle mountain mouth movie muscle museum mushroom
musician mustard nation nature neck needle neighbor neighbour nerve nest night
noodle noon nose notebook number nurse oak oar object ocean office officer
olive omelette onion opera orchard orchestra organ oven owner ox pad paddle
page pail pain paint pair palace palm pancake panther pantry paper parade
parent park parrot part party passenger pasta pastry patch patient pattern paw
pea peace peach peak peanut pear pebble pedal pencil penguin people pepper
perfume person pet piano picnic picture piece pier pig pigeon pile pillow
pilot pine pipe pirate pit pizza place plain planet plant plastic plate
platform player pleasure plot plough plow plum pocket poem poet point poison
police pond pool porch porridge port position potato powder power prayer
present president price prince prize problem product professor program
property pudding puddle pump pumpkin pupil purpose puzzle pyramid quarry
quarter queen question quilt rabbit race rack radish rail railway rainbow ranch
rattle reason receipt record reed refrigerator reindeer relative religion rent
report reptile rest restaurant result reward rhythm ribbon rice riddle rifle
river road robe rocket roll room rooster root rose route rubbish ruler rum
sack sail salad salmon sauce sausage scarf scene school science scissors
scorpion screw sculpture season seat secret secretary seed servant settlement
shade shadow shampoo shape shark shed shell shelter shepherd ship shop shore
shoulder shower side sidewalk signal silk singer sister size skate skeleton
skin skirt skull sled sleeve slice slipper slope smell smile snail sneeze snow
soap society sock sofa soil soldier son sound soup space sparrow speaker speech
sphere spider spinach sponge spoon sport spot spring square squirrel stable
stadium stage stain stake stamp station steak stem stew stick stitch stocking
stomach storm story stove straw strawberry stream street string student
submarine subway sugar suit summer summit supper surface surprise sweater
sweet swimmer swing sword syrup system tablecloth tail tailor tale tank tap
taxi teacher team tear teeth temper temple tennis tent territory test thermometer
thing thorn thought throat thumb ticket tide tie tiger timber time tire toad
toe tomato tongue tool tooth top tornado tortoise towel town toy tractor trade
traffic train tram transport trap tray treasure treaty tree trench trial
triangle trick trolley trousers truck trumpet trunk tube tulip tune turkey
turnip turtle umbrella uncle uniform universe valley van vegetable vehicle
veil vein velvet vessel vest video view village vinegar violin visitor voice
volcano wagon waist waiter wall walnut war warehouse washer wasp waste wave wax
way weapon weather wedding weed week weight whale wheat wheelbarrow whisker
widow wife window wing winter wire wisdom wolf wool word work worker workshop
world wound wreath wrist yacht yard year yolk zebra zoo
""".split()

ADJECTIVES_EXTRA = """
able absent active actual afraid alert alive ample angry annual anxious
apparent arid ashen awful awkward bare basic bitter blank bleak blind bold
brave brief brisk broad busy calm careful casual cheerful chilly civil clever
close cloudy clumsy coarse common complete constant content crisp cruel cute
daring dear decent dense direct dizzy double eager early easy empty equal
exact extra faint fair false famous fancy fatal fine firm flat fond foolish
formal fragile frank free frequent friendly frosty funny fussy gentle giddy
glad glum good graceful gradual grateful greedy grim gross guilty handy hardy
harsh hasty healthy helpful helpless honest hopeful huge humid hungry icy idle
ill immense innocent intense jolly juicy keen lame large lazy legal level
likely lively local lonely loyal lucky mad major mean meek mild minor modest
moral narrow neat neutral nice nimble noble normal numb odd obscure orderly
partial patient perfect petty plump polite poor popular possible prime private
proper proud public pure quick rapid rare ready real regular rich rigid ripe
robust rude rural sacred sane scarce secure serious severe shy silly simple
sincere single skilled slight slim slow sly smart sober solemn solid sore
sour spare special splendid stark steep stern stiff still stormy strict
sturdy sudden sunken superb sure swift tame tender tense thorough tidy timid
total tough tragic tricky true typical ultimate unique upset urgent usual
vague valid vast vivid wary weak wealthy weird whole wicked wide wise witty
wooden woolly worthy wrong yearly young zealous
""".split()
