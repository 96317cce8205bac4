// Common given names and surnames (US Census frequency lists), lowercase, sorted.
// Entries that double as everyday English words are left out.

#[rustfmt::skip]
pub(crate) static NAMES: &[&str] = &[
    "aaron", "abbey", "abbie", "abbott", "abby", "abdul", "abe", "abel", "abigail", "abraham",
    "abram", "acevedo", "acosta", "ada", "adah", "adalberto", "adaline", "adam", "adams", "adan",
    "addie", "adela", "adelaida", "adelaide", "adele", "adelia", "adelina", "adeline", "adell",
    "adella", "adelle", "adena", "adina", "adkins", "adolfo", "adolph", "adria", "adrian",
    "adriana", "adriane", "adrianna", "adrianne", "adrien", "adriene", "adrienne", "afton",
    "agatha", "agnes", "agnus", "agripina", "agueda", "aguilar", "aguirre", "agustin", "agustina",
    "ahmad", "ahmed", "aida", "aide", "aiko", "aileen", "ailene", "aimee", "aisha", "aja", "akiko",
    "akilah", "alaina", "alaine", "alan", "alana", "alane", "alanna", "alayna", "alba", "albert",
    "alberta", "albertha", "albertina", "albertine", "alberto", "albina", "alda", "alden", "aldo",
    "alease", "alec", "alecia", "aleen", "aleida", "aleisha", "alejandra", "alejandrina",
    "alejandro", "alena", "alene", "alesha", "aleshia", "alesia", "alessandra", "aleta", "aletha",
    "alethea", "alethia", "alexa", "alexander", "alexandra", "alexandria", "alexia", "alexis",
    "alfonso", "alfonzo", "alford", "alfred", "alfreda", "alfredia", "alfredo", "ali", "alia",
    "alica", "alice", "alicia", "alida", "alina", "aline", "alisa", "alise", "alisha", "alishia",
    "alisia", "alison", "alissa", "alita", "alix", "aliza", "alla", "allan", "alleen", "allegra",
    "allen", "allena", "allene", "allie", "alline", "allison", "allyn", "allyson", "alma", "almeda",
    "almeta", "alona", "alonso", "alonzo", "alpha", "alphonse", "alphonso", "alston", "alta",
    "altagracia", "altha", "althea", "alton", "alva", "alvarado", "alvarez", "alvaro", "alvera",
    "alverta", "alvin", "alvina", "alyce", "alycia", "alysa", "alyse", "alysha", "alysia", "alyson",
    "alyssa", "amada", "amado", "amal", "amalia", "amanda", "amberly", "ambrose", "amee", "amelia",
    "ami", "amie", "amiee", "amina", "amira", "ammie", "amos", "amparo", "amy", "ana", "anabel",
    "analisa", "anamaria", "anastacia", "anastasia", "andera", "anderson", "andra", "andre",
    "andrea", "andreas", "andree", "andres", "andrew", "andrews", "andria", "anette", "angela",
    "angele", "angelena", "angelia", "angelic", "angelica", "angelika", "angelina", "angeline",
    "angelique", "angelita", "angella", "angelo", "angelyn", "angie", "angila", "angla", "anglea",
    "anh", "anibal", "anika", "anisa", "anisha", "anissa", "anita", "anitra", "anja", "anjanette",
    "anjelica", "anna", "annabel", "annabell", "annabelle", "annalee", "annalisa", "annamae",
    "annamaria", "annamarie", "anne", "anneliese", "annelle", "annemarie", "annett", "annetta",
    "annette", "annice", "annie", "annika", "annis", "annita", "annmarie", "anthony", "antione",
    "antionette", "antoine", "antoinette", "anton", "antone", "antonetta", "antonette", "antonia",
    "antonietta", "antonina", "antonio", "antony", "antwan", "anya", "apolonia", "apryl", "ara",
    "araceli", "aracelis", "aracely", "arcelia", "archie", "ardath", "ardelia", "ardell", "ardella",
    "ardelle", "arden", "ardis", "ardith", "aretha", "argelia", "argentina", "ariana", "ariane",
    "arianna", "arianne", "arica", "arie", "ariel", "arielle", "arla", "arlean", "arleen", "arlen",
    "arlena", "arlene", "arletha", "arletta", "arlette", "arlie", "arlinda", "arline", "arlyne",
    "armand", "armanda", "armandina", "armando", "armida", "arminda", "armstrong", "arnetta",
    "arnette", "arnita", "arnold", "arnoldo", "arnulfo", "aron", "arron", "arthur", "artie",
    "arturo", "arvilla", "asa", "asha", "ashanti", "ashely", "ashlea", "ashlee", "ashleigh",
    "ashley", "ashli", "ashlie", "ashly", "ashlyn", "ashton", "asley", "assunta", "astrid",
    "asuncion", "athena", "atkins", "atkinson", "aubrey", "audie", "audra", "audrea", "audrey",
    "audria", "audrie", "audry", "augusta", "augustina", "augustine", "augustus", "aundrea", "aura",
    "aurea", "aurelia", "aurelio", "aurora", "aurore", "autumn", "ava", "avelina", "avery", "avila",
    "avis", "avril", "awilda", "ayako", "ayala", "ayana", "ayanna", "ayers", "ayesha", "azalee",
    "azucena", "azzie", "babara", "babette", "bailey", "baird", "baldwin", "ballard", "bambi",
    "bao", "barabara", "barb", "barbar", "barbara", "barber", "barbera", "barbie", "barbra", "bari",
    "barker", "barlow", "barnes", "barnett", "barney", "barr", "barrera", "barrett", "barrie",
    "barron", "barry", "bart", "bartlett", "barton", "basil", "basilia", "bass", "bates", "bauer",
    "baxter", "bea", "bean", "beard", "beasley", "beata", "beatrice", "beatris", "beatriz", "beau",
    "beaulah", "bebe", "beck", "becker", "becki", "beckie", "becky", "belen", "belia", "belinda",
    "belkis", "bella", "belle", "belva", "bender", "benedict", "benita", "benito", "benjamin",
    "bennett", "bennie", "benny", "benson", "bentley", "benton", "berenice", "berg", "berger",
    "berna", "bernadette", "bernadine", "bernard", "bernarda", "bernardina", "bernardine",
    "bernardo", "berneice", "bernetta", "bernice", "bernie", "berniece", "bernita", "berry", "bert",
    "berta", "bertha", "bertie", "bertram", "beryl", "bess", "bessie", "beth", "bethanie",
    "bethann", "bethany", "bethel", "betsey", "betsy", "bette", "bettie", "bettina", "betty",
    "bettyann", "bettye", "beula", "beulah", "bev", "beverlee", "beverley", "beverly", "bianca",
    "bibi", "billi", "billie", "billy", "billye", "birdie", "birgit", "blackburn", "blackwell",
    "blaine", "blair", "blake", "blanca", "blanch", "blanchard", "blanche", "blankenship",
    "blevins", "blondell", "blossom", "blythe", "bobbi", "bobbie", "bobby", "bobbye", "bobette",
    "bok", "bolton", "bong", "bonita", "bonner", "bonnie", "bonny", "booker", "boone", "booth",
    "boris", "bowen", "bowers", "bowman", "boyce", "boyd", "boyer", "boyle", "brad", "bradford",
    "bradley", "bradly", "bradshaw", "brady", "branda", "brande", "brandee", "branden", "brandi",
    "brandie", "brandon", "brandy", "brant", "bray", "breana", "breann", "breanna", "breanne",
    "bree", "brenda", "brendan", "brendon", "brenna", "brennan", "brent", "brenton", "bret",
    "brett", "brewer", "brian", "briana", "brianna", "brianne", "brice", "bridges", "bridget",
    "bridgett", "bridgette", "brigette", "briggs", "brigid", "brigida", "brigitte", "brinda",
    "britany", "britney", "britni", "britt", "britta", "brittaney", "brittani", "brittanie",
    "brittany", "britteny", "brittney", "brittni", "brittny", "brock", "broderick", "bronwyn",
    "brook", "brooke", "brooks", "browning", "bruce", "bruna", "brunilda", "bruno", "bryan",
    "bryanna", "bryant", "bryce", "brynn", "bryon", "buchanan", "buck", "buckley", "buckner", "bud",
    "buena", "buffy", "buford", "bula", "bulah", "bullock", "bunny", "burch", "burgess", "burke",
    "burks", "burl", "burma", "burnett", "burns", "burris", "burt", "burton", "buster", "butler",
    "byers", "byrd", "byron", "cabrera", "cain", "caitlin", "caitlyn", "calandra", "calderon",
    "caldwell", "caleb", "calhoun", "calista", "callahan", "callie", "calvin", "camacho", "camelia",
    "camellia", "cameron", "cami", "camie", "camila", "camilla", "camille", "cammie", "cammy",
    "campbell", "campos", "candace", "candance", "candelaria", "candi", "candice", "candida",
    "candie", "candis", "candra", "candyce", "cannon", "cantrell", "cantu", "caprice", "cara",
    "cardenas", "caren", "carey", "cari", "caridad", "carie", "carin", "carina", "carisa",
    "carissa", "carita", "carl", "carla", "carlee", "carleen", "carlena", "carlene", "carletta",
    "carley", "carli", "carlie", "carline", "carlita", "carlo", "carlos", "carlota", "carlotta",
    "carlson", "carlton", "carly", "carlyn", "carma", "carman", "carmel", "carmela", "carmelia",
    "carmelina", "carmelita", "carmella", "carmelo", "carmen", "carmina", "carmine", "carmon",
    "carney", "carol", "carola", "carolann", "carole", "carolee", "carolin", "caroline", "caroll",
    "carolyn", "carolyne", "carolynn", "caron", "caroyln", "carpenter", "carr", "carri", "carrie",
    "carrillo", "carrol", "carroll", "carson", "carver", "cary", "caryl", "carylon", "caryn",
    "casandra", "casey", "casie", "casimira", "cassandra", "cassaundra", "cassey", "cassi",
    "cassidy", "cassie", "cassondra", "cassy", "castaneda", "castillo", "castro", "catalina",
    "catarina", "caterina", "catharine", "catherin", "catherina", "catherine", "cathern",
    "catheryn", "cathey", "cathi", "cathie", "cathleen", "cathrine", "cathryn", "cathy", "catina",
    "catrice", "catrina", "cayla", "cecelia", "cecil", "cecila", "cecile", "cecilia", "cecille",
    "cecily", "cedric", "cedrick", "celena", "celesta", "celeste", "celestina", "celestine",
    "celia", "celina", "celinda", "celine", "celsa", "ceola", "cervantes", "cesar", "chad",
    "chadwick", "chae", "chambers", "chan", "chana", "chanda", "chandler", "chandra", "chanel",
    "chanell", "chanelle", "chaney", "chang", "chantal", "chantay", "chante", "chantel", "chantell",
    "chantelle", "chapman", "chara", "charis", "charise", "charissa", "charisse", "charita",
    "charla", "charleen", "charlena", "charlene", "charles", "charlesetta", "charlette", "charley",
    "charline", "charlott", "charlotte", "charlsie", "charlyn", "charmain", "charmaine",
    "charolette", "chas", "chasidy", "chasity", "chassidy", "chastity", "chau", "chauncey",
    "chavez", "chaya", "chelsey", "chelsie", "chen", "cher", "chere", "cheree", "cherelle", "cheri",
    "cherie", "cherilyn", "cherise", "cherish", "cherly", "cherlyn", "cherri", "cherrie", "cherryl",
    "chery", "cheryl", "cheryle", "cheryll", "chester", "chet", "cheyenne", "chia", "chieko",
    "chin", "ching", "chiquita", "chloe", "chong", "chris", "chrissy", "christa", "christal",
    "christeen", "christel", "christen", "christena", "christene", "christensen", "christi",
    "christia", "christiana", "christiane", "christie", "christin", "christina", "christine",
    "christinia", "christoper", "christopher", "christy", "chrystal", "chu", "chuck", "chun",
    "chung", "ciara", "cicely", "ciera", "cierra", "cinda", "cinderella", "cindi", "cindie",
    "cindy", "cinthia", "cira", "clair", "claire", "clara", "clare", "clarence", "claretha",
    "claretta", "claribel", "clarice", "clarinda", "clarine", "claris", "clarisa", "clarissa",
    "clarita", "clark", "clarke", "classie", "claud", "claude", "claudette", "claudia", "claudie",
    "claudine", "claudio", "clay", "clayton", "clelia", "clemencia", "clement", "clemente",
    "clementina", "clementine", "clements", "clemmie", "clemons", "cleo", "cleopatra", "cleora",
    "cleotilde", "cleta", "cletus", "cleveland", "cliff", "clifford", "clifton", "cline", "clint",
    "clora", "clorinda", "clotilde", "clyde", "cobb", "cochran", "codi", "cody", "coffey", "cohen",
    "colby", "cole", "coleen", "coleman", "colene", "coletta", "colette", "colin", "colleen",
    "collen", "collene", "collette", "collier", "collin", "collins", "colon", "colton", "columbus",
    "combs", "compton", "concepcion", "conception", "concetta", "concha", "conchita", "conley",
    "conner", "connie", "conrad", "constance", "consuela", "consuelo", "contessa", "contreras",
    "conway", "cooke", "cooley", "copeland", "cora", "coralee", "coralie", "corazon", "cordelia",
    "cordell", "cordia", "cordie", "coreen", "corene", "coretta", "corey", "cori", "corie",
    "corina", "corine", "corinna", "corinne", "corliss", "cornelia", "cornelius", "cornell",
    "corrie", "corrin", "corrina", "corrine", "corrinne", "cortez", "cortney", "cory", "cote",
    "courtney", "cox", "coy", "craft", "craig", "crane", "crawford", "creola", "cris", "criselda",
    "crissy", "crista", "cristal", "cristen", "cristi", "cristie", "cristin", "cristina",
    "cristine", "cristobal", "cristopher", "cristy", "crosby", "cruz", "crysta", "crystle", "cuc",
    "cummings", "cunningham", "curry", "curt", "curtis", "cyndi", "cyndy", "cynthia", "cyril",
    "cyrstal", "cyrus", "cythia", "dacia", "dagmar", "dagny", "dahlia", "daina", "daine", "daisey",
    "dakota", "dale", "dalene", "dalia", "dalila", "dalton", "damaris", "damian", "damien",
    "damion", "damon", "dana", "danae", "dane", "danelle", "danette", "dani", "dania", "danial",
    "danica", "daniel", "daniela", "daniele", "daniell", "daniella", "danielle", "daniels",
    "danika", "danille", "danilo", "danita", "dann", "danna", "dannette", "dannie", "dannielle",
    "danny", "dante", "danuta", "danyel", "danyell", "danyelle", "daphine", "daphne", "dara",
    "darby", "darcel", "darcey", "darci", "darcie", "darcy", "darell", "daren", "daria", "darin",
    "dario", "darius", "darla", "darleen", "darlena", "darlene", "darline", "darnell", "daron",
    "darrel", "darrell", "darren", "darrick", "darrin", "darron", "darryl", "darwin", "daryl",
    "daugherty", "davenport", "david", "davida", "davidson", "davina", "davis", "dawna", "dawne",
    "dawson", "dayle", "dayna", "daysi", "deadra", "deana", "deandra", "deandre", "deandrea",
    "deane", "deangelo", "deann", "deanna", "deanne", "deb", "debbi", "debbie", "debbra", "debby",
    "debera", "debi", "debora", "deborah", "debra", "debrah", "debroah", "decker", "dede", "dedra",
    "dee", "deeann", "deeanna", "deedee", "deedra", "deena", "deetta", "deidra", "deidre",
    "deirdre", "deja", "dejesus", "del", "delacruz", "delaine", "delana", "delaney", "delbert",
    "delcie", "delena", "deleon", "delfina", "delgado", "delia", "delicia", "delila", "delilah",
    "delinda", "delisa", "dell", "della", "delma", "delmar", "delmer", "delmy", "delois", "deloise",
    "delora", "deloras", "delores", "deloris", "delorse", "delpha", "delphia", "delphine", "delsie",
    "delta", "demarcus", "demetra", "demetria", "demetrice", "demetrius", "dena", "denae", "deneen",
    "denese", "denice", "denis", "denise", "denisha", "denisse", "denita", "denna", "dennis",
    "dennise", "denny", "denver", "denyse", "deon", "deonna", "derek", "derick", "derrick",
    "deshawn", "desirae", "desiree", "desmond", "despina", "dessie", "detra", "devin", "devon",
    "devona", "devora", "devorah", "dewayne", "dewey", "dewitt", "dexter", "dia", "dian", "diana",
    "diane", "diann", "dianna", "dianne", "diaz", "dickerson", "dickson", "diedra", "diedre",
    "dierdre", "digna", "dillard", "dillon", "dimple", "dina", "dinah", "dino", "dinorah", "dion",
    "dione", "dionna", "dionne", "dirk", "divina", "dixie", "dixon", "dodie", "dodson", "dollie",
    "dolly", "dolores", "doloris", "domenic", "domenica", "dominga", "domingo", "dominguez",
    "dominic", "dominica", "dominick", "dominique", "dominque", "domitila", "domonique", "dona",
    "donald", "donaldson", "donella", "donetta", "donette", "dong", "donita", "donn", "donna",
    "donnell", "donnetta", "donnette", "donnie", "donny", "donovan", "donte", "donya", "dora",
    "dorathy", "dorcas", "doreatha", "doreen", "dorene", "doretha", "dorethea", "doretta", "dori",
    "doria", "dorian", "dorie", "dorinda", "dorine", "doris", "dorla", "dorotha", "dorothea",
    "dorothy", "dorris", "dorsey", "dortha", "dorthea", "dorthey", "dorthy", "dotson", "dottie",
    "dotty", "doug", "douglas", "douglass", "dovie", "downs", "doyle", "drake", "dreama", "drema",
    "drucilla", "drusilla", "duane", "dudley", "duffy", "dulce", "dulcie", "duncan", "dung",
    "dunlap", "dunn", "duran", "durham", "dusti", "dustin", "dwain", "dwana", "dwayne", "dwight",
    "dyan", "dyer", "dylan", "earl", "earle", "earlean", "earleen", "earlene", "earlie", "earline",
    "earnest", "earnestine", "eartha", "easter", "eaton", "eboni", "ebonie", "ebony", "eda", "edda",
    "eddie", "eddy", "edelmira", "eden", "edgar", "edgardo", "edie", "edison", "edith", "edmond",
    "edmund", "edmundo", "edna", "edra", "edris", "eduardo", "edward", "edwardo", "edwards",
    "edwin", "edwina", "edyth", "edythe", "effie", "efrain", "efren", "ehtel", "eileen", "eilene",
    "ela", "eladia", "elaina", "elaine", "elana", "elane", "elanor", "elayne", "elba", "elbert",
    "elda", "elden", "eldon", "eldora", "eldridge", "eleanor", "eleanora", "eleanore", "elease",
    "elena", "elene", "eleni", "elenor", "elenora", "elenore", "eleonor", "eleonora", "eleonore",
    "elfreda", "elfrieda", "elfriede", "eli", "elia", "eliana", "elias", "elicia", "elida",
    "elidia", "elijah", "elin", "elina", "elinor", "elinore", "elisa", "elisabeth", "elise",
    "eliseo", "elisha", "elissa", "eliz", "eliza", "elizabet", "elizabeth", "elizbeth", "elizebeth",
    "elke", "ella", "ellamae", "ellan", "ellen", "ellena", "elli", "ellie", "elliot", "elliott",
    "ellis", "ellison", "ellsworth", "elly", "ellyn", "elma", "elmer", "elmira", "elmo", "elna",
    "elnora", "elodia", "elois", "eloisa", "eloise", "elouise", "eloy", "elroy", "elsa", "elsie",
    "elsy", "elton", "elva", "elvera", "elvia", "elvie", "elvin", "elvina", "elvira", "elvis",
    "elwanda", "elwood", "elyse", "elza", "ema", "emanuel", "emelda", "emelia", "emelina",
    "emeline", "emely", "emerald", "emerita", "emerson", "emery", "emiko", "emil", "emile",
    "emilee", "emilia", "emilie", "emilio", "emily", "emma", "emmaline", "emmanuel", "emmett",
    "emmie", "emmitt", "emmy", "emogene", "emory", "ena", "enda", "enedina", "eneida", "enid",
    "enoch", "enola", "enrique", "enriqueta", "epifania", "erasmo", "eric", "erica", "erich",
    "erick", "ericka", "erickson", "erik", "erika", "erin", "erinn", "erlene", "erlinda", "erline",
    "erma", "ermelinda", "erminia", "erna", "ernest", "ernestina", "ernestine", "ernesto", "ernie",
    "errol", "ervin", "erwin", "eryn", "esmeralda", "esperanza", "espinoza", "essie", "esta",
    "esteban", "estefana", "estela", "estell", "estella", "estelle", "ester", "estes", "esther",
    "estrada", "estrella", "etha", "ethan", "ethel", "ethelene", "ethelyn", "ethyl", "etsuko",
    "etta", "ettie", "eufemia", "eugena", "eugene", "eugenia", "eugenie", "eugenio", "eula",
    "eulah", "eulalia", "eun", "euna", "eunice", "eura", "eusebia", "eusebio", "eustolia", "eva",
    "evalyn", "evan", "evangelina", "evangeline", "evans", "eve", "evelia", "evelin", "evelina",
    "eveline", "evelyn", "evelyne", "evelynn", "everett", "everette", "evette", "evia", "evie",
    "evita", "evon", "evonne", "ewa", "ewing", "exie", "ezekiel", "ezequiel", "ezra", "fabian",
    "fabiola", "fae", "fairy", "fallon", "fannie", "fanny", "farah", "farley", "farmer", "farrah",
    "farrell", "fatima", "fatimah", "faulkner", "faustina", "faustino", "fausto", "faviola", "fawn",
    "fay", "faye", "federico", "felecia", "felica", "felice", "felicia", "felicidad", "felicita",
    "felicitas", "felipa", "felipe", "felisa", "felisha", "felix", "felton", "ferdinand",
    "ferguson", "fermin", "fermina", "fern", "fernanda", "fernande", "fernandez", "fernando",
    "ferne", "ferrell", "fidel", "fidela", "fidelia", "figueroa", "filiberto", "filomena", "finch",
    "finley", "fiona", "fischer", "fitzgerald", "fitzpatrick", "flavia", "fleming", "fleta",
    "fletcher", "flo", "flor", "flora", "florance", "florence", "florencia", "florencio", "florene",
    "florentina", "florentino", "flores", "floretta", "floria", "florinda", "florine", "florrie",
    "flossie", "floy", "floyd", "flynn", "foley", "fonda", "forbes", "foreman", "forrest", "foster",
    "fowler", "fran", "francene", "frances", "francesca", "francesco", "franchesca", "francie",
    "francina", "francine", "francis", "francisca", "francisco", "franco", "francoise", "frankie",
    "franklin", "franklyn", "franks", "fransisca", "frazier", "fred", "freda", "fredda", "freddie",
    "freddy", "frederic", "frederica", "frederick", "fredericka", "fredia", "fredric", "fredrick",
    "fredricka", "freeda", "freeman", "freida", "frida", "frieda", "fritz", "frost", "fry", "frye",
    "fuentes", "fuller", "fulton", "fumiko", "gabriel", "gabriela", "gabriele", "gabriella",
    "gabrielle", "gail", "gaines", "gala", "gale", "galen", "galina", "gallagher", "gallegos",
    "galloway", "gamble", "garcia", "gardner", "garfield", "garland", "garner", "garnet", "garnett",
    "garret", "garrett", "garrison", "garry", "garth", "gary", "garza", "gaston", "gates", "gavin",
    "gaye", "gayla", "gayle", "gaylene", "gaylord", "gaynell", "gaynelle", "gearldine", "gema",
    "gemma", "gena", "genaro", "genesis", "geneva", "genevie", "genevieve", "genevive", "genia",
    "genie", "genna", "gennie", "genny", "genoveva", "gentry", "geoffrey", "georgann", "george",
    "georgeann", "georgeanna", "georgene", "georgetta", "georgette", "georgiana", "georgiann",
    "georgianna", "georgianne", "georgie", "georgina", "georgine", "gerald", "geraldine", "geraldo",
    "geralyn", "gerard", "gerardo", "gerda", "geri", "germaine", "gerri", "gerry", "gertha",
    "gertie", "gertrud", "gertrude", "gertrudis", "gertude", "ghislaine", "gia", "gianna", "gibbs",
    "gibson", "gidget", "gigi", "gil", "gilbert", "gilberte", "gilberto", "gilda", "giles", "gill",
    "gillespie", "gilliam", "gillian", "gilma", "gilmore", "gina", "ginette", "ginny", "gino",
    "giovanna", "giovanni", "gisela", "gisele", "giselle", "gita", "giuseppe", "giuseppina",
    "gladis", "glady", "gladys", "glayds", "glen", "glenda", "glendora", "glenn", "glenna",
    "glennie", "glennis", "glinda", "gloria", "glover", "glynda", "glynis", "goff", "golda",
    "goldie", "gomez", "gonzales", "gonzalez", "gonzalo", "goodman", "goodwin", "gould", "gracia",
    "gracie", "graciela", "grady", "graham", "graig", "granville", "graves", "gray", "grayce",
    "grazyna", "greene", "greer", "greg", "gregg", "gregoria", "gregorio", "gregory", "greta",
    "gretchen", "gretta", "gricelda", "griffin", "griffith", "grimes", "grisel", "griselda",
    "grover", "guadalupe", "gudrun", "guerra", "guerrero", "guillermina", "guillermo", "gus",
    "gussie", "gustavo", "guthrie", "gutierrez", "guzman", "gwen", "gwenda", "gwendolyn", "gwenn",
    "gwyn", "gwyneth", "hae", "hahn", "hai", "hailey", "hal", "hale", "haley", "halina", "halley",
    "hallie", "hamilton", "hammond", "hampton", "han", "hana", "hancock", "haney", "hanh", "hank",
    "hanna", "hannah", "hannelore", "hans", "hansen", "hanson", "hardin", "harding", "hardy",
    "harlan", "harland", "harley", "harmon", "harold", "harper", "harrell", "harriet", "harriett",
    "harriette", "harrington", "harris", "harrison", "harry", "hart", "hartman", "harvey", "hassan",
    "hassie", "hatfield", "hattie", "hawkins", "haydee", "hayden", "hayes", "hayley", "haynes",
    "hays", "haywood", "heath", "heather", "hebert", "hector", "hedwig", "hedy", "hee", "heide",
    "heidi", "heidy", "heike", "helaine", "helen", "helena", "helene", "helga", "hellen",
    "henderson", "hendricks", "hendrix", "henrietta", "henriette", "henry", "hensley", "henson",
    "herb", "herbert", "heriberto", "herlinda", "herma", "herman", "hermelinda", "hermila",
    "hermina", "hermine", "herminia", "hernandez", "herrera", "herring", "herschel", "hershel",
    "herta", "hertha", "hess", "hester", "hettie", "hewitt", "hickman", "hicks", "hiedi", "hien",
    "higgins", "hilaria", "hilario", "hilary", "hilda", "hilde", "hildegard", "hildegarde",
    "hildred", "hillary", "hilma", "hilton", "hines", "hinton", "hipolito", "hiram", "hiroko",
    "hisako", "hoa", "hobbs", "hobert", "hodge", "hodges", "hoffman", "hogan", "holcomb", "holden",
    "holder", "holland", "holley", "holli", "hollie", "hollis", "holloway", "holman", "holmes",
    "holt", "homer", "hood", "hooper", "hoover", "hopkins", "hopper", "horace", "horacio", "horn",
    "horne", "hortencia", "hortense", "hortensia", "horton", "hosea", "howard", "howe", "howell",
    "hoyt", "hsiu", "hubbard", "huber", "hubert", "hudson", "hue", "huey", "huff", "huffman",
    "hugh", "hughes", "hugo", "hui", "hulda", "hull", "humberto", "humphrey", "hung", "huong",
    "hurley", "hurst", "hutchinson", "hwa", "hyacinth", "hyde", "hye", "hyman", "hyo", "hyon",
    "hyun", "ian", "ida", "idalia", "idell", "idella", "iesha", "ignacia", "ignacio", "ike", "ila",
    "ilana", "ilda", "ileana", "ileen", "ilene", "iliana", "illa", "ilona", "ilse", "iluminada",
    "ima", "imelda", "imogene", "ina", "indira", "inell", "ines", "inez", "inga", "inge",
    "ingeborg", "inger", "ingram", "ingrid", "inocencia", "iola", "iona", "ione", "ira", "iraida",
    "irena", "irene", "irina", "irma", "irmgard", "irvin", "irving", "irwin", "isa", "isaac",
    "isabel", "isabell", "isabella", "isabelle", "isadora", "isaiah", "isaias", "isaura", "isela",
    "isiah", "isidra", "isidro", "isis", "ismael", "isobel", "isreal", "issac", "iva", "ivan",
    "ivana", "ivelisse", "ivette", "ivey", "ivonne", "izetta", "izola", "ja", "jacalyn", "jacelyn",
    "jacinda", "jacinta", "jacinto", "jack", "jackeline", "jackelyn", "jacki", "jackie", "jacklyn",
    "jackqueline", "jackson", "jaclyn", "jacob", "jacobs", "jacobson", "jacqualine", "jacque",
    "jacquelin", "jacqueline", "jacquelyn", "jacquelyne", "jacquelynn", "jacques", "jacquetta",
    "jacqui", "jacquie", "jacquiline", "jacquline", "jacqulyn", "jada", "jadwiga", "jae", "jaime",
    "jaimee", "jaimie", "jake", "jaleesa", "jalisa", "jama", "jamaal", "jamal", "jamar", "jame",
    "jamee", "jamel", "james", "jamey", "jami", "jamie", "jamika", "jamila", "jamison", "jammie",
    "jana", "janae", "janay", "jane", "janean", "janee", "janeen", "janel", "janell", "janella",
    "janelle", "janene", "janessa", "janet", "janeth", "janett", "janetta", "janette", "janey",
    "jani", "janice", "janie", "janiece", "janina", "janine", "janis", "janise", "janita", "jann",
    "janna", "jannet", "jannette", "jannie", "janyce", "jaqueline", "jaquelyn", "jared", "jarod",
    "jarred", "jarrett", "jarrod", "jarvis", "jasmin", "jasmine", "jason", "jasper", "jaunita",
    "javier", "jaye", "jayme", "jaymie", "jayna", "jayne", "jayson", "jazmin", "jazmine", "jc",
    "jean", "jeana", "jeane", "jeanelle", "jeanene", "jeanett", "jeanetta", "jeanette", "jeanice",
    "jeanie", "jeanine", "jeanmarie", "jeanna", "jeanne", "jeannetta", "jeannette", "jeannie",
    "jeannine", "jed", "jeff", "jefferey", "jefferson", "jeffery", "jeffie", "jeffrey", "jeffry",
    "jen", "jena", "jenae", "jene", "jenee", "jenell", "jenelle", "jenette", "jeneva", "jeni",
    "jenice", "jenifer", "jeniffer", "jenine", "jenise", "jenkins", "jenna", "jennefer", "jennell",
    "jennette", "jenni", "jennie", "jennifer", "jenniffer", "jennine", "jennings", "jenny",
    "jensen", "jerald", "jeraldine", "jeramy", "jere", "jeremiah", "jeremy", "jeri", "jerica",
    "jerilyn", "jerlene", "jermaine", "jerold", "jerome", "jeromy", "jerrell", "jerri", "jerrica",
    "jerrie", "jerrod", "jerrold", "jerry", "jesenia", "jesica", "jess", "jesse", "jessenia",
    "jessi", "jessia", "jessica", "jessie", "jessika", "jestine", "jesus", "jesusa", "jesusita",
    "jetta", "jettie", "jewel", "jewell", "jill", "jillian", "jimenez", "jimmie", "jimmy", "jin",
    "jina", "jinny", "joan", "joana", "joane", "joanie", "joann", "joanna", "joanne", "joannie",
    "joaquin", "joaquina", "jocelyn", "jodee", "jodi", "jodie", "jody", "joeann", "joel", "joella",
    "joelle", "joellen", "joesph", "joetta", "joette", "joey", "johana", "johanna", "johanne",
    "john", "johna", "johnathan", "johnathon", "johnetta", "johnette", "johnie", "johnna",
    "johnnie", "johnny", "johns", "johnsie", "johnson", "johnston", "joi", "joie", "jolanda",
    "joleen", "jolene", "jolie", "joline", "jolyn", "jolynn", "jon", "jona", "jonah", "jonas",
    "jonathan", "jonathon", "jone", "jonell", "jonelle", "jones", "jong", "joni", "jonie", "jonna",
    "jonnie", "jordon", "jorge", "jose", "josef", "josefa", "josefina", "josefine", "joselyn",
    "joseph", "josephina", "josephine", "josette", "joshua", "josiah", "josie", "joslyn", "jospeh",
    "josphine", "josue", "jovan", "jovita", "joya", "joyce", "joycelyn", "joye", "joyner", "juan",
    "juana", "juanita", "juarez", "jude", "judi", "judie", "judith", "judson", "judy", "jule",
    "julee", "julene", "jules", "juli", "julia", "julian", "juliana", "juliane", "juliann",
    "julianna", "julianne", "julie", "julieann", "julienne", "juliet", "julieta", "julietta",
    "juliette", "julio", "julissa", "julius", "jung", "junie", "junita", "junko", "justa", "justin",
    "justina", "justine", "jutta", "kacey", "kaci", "kacie", "kacy", "kai", "kaila", "kaitlin",
    "kaitlyn", "kala", "kaleigh", "kaley", "kali", "kallie", "kalyn", "kam", "kamala", "kami",
    "kamilah", "kandace", "kandi", "kandice", "kandis", "kandra", "kandy", "kane", "kanesha",
    "kanisha", "kara", "karan", "kareem", "kareen", "karen", "karena", "karey", "kari", "karie",
    "karima", "karin", "karina", "karine", "karisa", "karissa", "karl", "karla", "karleen",
    "karlene", "karly", "karlyn", "karma", "karmen", "karol", "karole", "karoline", "karolyn",
    "karon", "karren", "karri", "karrie", "karry", "kary", "karyl", "karyn", "kasandra", "kasey",
    "kasha", "kasi", "kasie", "kassandra", "kassie", "kate", "katelin", "katelyn", "katelynn",
    "katerine", "kathaleen", "katharina", "katharine", "katharyn", "kathe", "katheleen", "katherin",
    "katherina", "katherine", "kathern", "katheryn", "kathey", "kathi", "kathie", "kathleen",
    "kathlene", "kathline", "kathlyn", "kathrin", "kathrine", "kathryn", "kathryne", "kathy",
    "kathyrn", "kati", "katia", "katie", "katina", "katlyn", "katrice", "katrina", "kattie", "katy",
    "kaufman", "kay", "kayce", "kaycee", "kaye", "kayla", "kaylee", "kayleen", "kayleigh",
    "kaylene", "kazuko", "kecia", "keeley", "keely", "keena", "keenan", "keesha", "keiko", "keila",
    "keira", "keisha", "keith", "keitha", "keli", "kelle", "kellee", "keller", "kelley", "kelli",
    "kellie", "kelly", "kellye", "kelsey", "kelsi", "kelsie", "kelvin", "kemberly", "kemp", "kena",
    "kenda", "kendal", "kendall", "kendra", "kendrick", "keneth", "kenia", "kenisha", "kenna",
    "kennedy", "kenneth", "kennith", "kenny", "kent", "kenton", "kenya", "kenyatta", "kenyetta",
    "kera", "keren", "keri", "kermit", "kerr", "kerri", "kerrie", "kerry", "kerstin", "kesha",
    "keshia", "keturah", "keva", "keven", "kevin", "khadijah", "khalilah", "kia", "kiana", "kiara",
    "kidd", "kiera", "kiersten", "kiesha", "kieth", "kiley", "kim", "kimber", "kimberely",
    "kimberlee", "kimberley", "kimberli", "kimberlie", "kimberly", "kimbery", "kimbra", "kimi",
    "kimiko", "kina", "kindra", "kinney", "kip", "kira", "kirby", "kirk", "kirkland", "kirsten",
    "kirstie", "kirstin", "kisha", "kittie", "kitty", "kiyoko", "kizzie", "kizzy", "klara", "klein",
    "kline", "knapp", "knight", "knowles", "knox", "koch", "korey", "kori", "kortney", "kory",
    "kourtney", "kraig", "kramer", "kris", "krishna", "krissy", "krista", "kristal", "kristan",
    "kristeen", "kristel", "kristen", "kristi", "kristian", "kristie", "kristin", "kristina",
    "kristine", "kristle", "kristofer", "kristopher", "kristy", "kristyn", "krysta", "krystal",
    "krysten", "krystin", "krystina", "krystle", "krystyna", "kum", "kurt", "kurtis", "kyla",
    "kyle", "kylee", "kylie", "kym", "kymberly", "kyoko", "kyong", "kyra", "kyung", "lacey",
    "lachelle", "laci", "lacie", "lacresha", "lacy", "ladawn", "ladonna", "lael", "lahoma", "lai",
    "laila", "laine", "lajuana", "lakeesha", "lakeisha", "lakendra", "lakenya", "lakesha",
    "lakeshia", "lakia", "lakiesha", "lakisha", "lakita", "lala", "lamar", "lamb", "lambert",
    "lamonica", "lamont", "lana", "lancaster", "lance", "landon", "landry", "lanell", "lanelle",
    "lanette", "lang", "langley", "lani", "lanie", "lanita", "lannie", "lanny", "lanora",
    "laquanda", "laquita", "lara", "larae", "laraine", "laree", "larhonda", "larisa", "larissa",
    "larita", "laronda", "larraine", "larry", "larsen", "larson", "larue", "lasandra", "lashanda",
    "lashandra", "lashaun", "lashaunda", "lashawn", "lashawna", "lashawnda", "lashay", "lashell",
    "lashon", "lashonda", "lashunda", "lasonya", "latanya", "latarsha", "latasha", "latashia",
    "latesha", "latia", "laticia", "latina", "latisha", "latonia", "latonya", "latoria", "latosha",
    "latoya", "latoyia", "latrice", "latricia", "latrina", "latrisha", "launa", "laura", "lauralee",
    "lauran", "laure", "laureen", "laurel", "lauren", "laurena", "laurence", "laurene", "lauretta",
    "laurette", "lauri", "laurice", "laurie", "laurinda", "laurine", "lauryn", "lavada", "lavelle",
    "lavenia", "lavera", "lavern", "laverna", "laverne", "laveta", "lavette", "lavina", "lavinia",
    "lavon", "lavona", "lavonda", "lavone", "lavonia", "lavonna", "lavonne", "lawana", "lawanda",
    "lawanna", "lawerence", "lawrence", "lawson", "layla", "layne", "lazaro", "lea", "leach",
    "leah", "lean", "leana", "leandra", "leandro", "leann", "leanna", "leanne", "leanora", "leatha",
    "leatrice", "leblanc", "lecia", "leda", "lee", "leeann", "leeanna", "leeanne", "leena", "leesa",
    "leia", "leida", "leif", "leigh", "leigha", "leighann", "leila", "leilani", "leisa", "leisha",
    "lekisha", "lela", "lelah", "leland", "lelia", "lemuel", "len", "lena", "lenard", "lenita",
    "lenna", "lennie", "lenny", "lenora", "lenore", "leo", "leola", "leoma", "leon", "leona",
    "leonard", "leonarda", "leonardo", "leone", "leonel", "leonia", "leonida", "leonie", "leonila",
    "leonor", "leonora", "leonore", "leontine", "leopoldo", "leora", "leota", "lera", "leroy",
    "les", "lesa", "lesha", "lesia", "leslee", "lesley", "lesli", "leslie", "lessie", "lester",
    "leta", "letha", "leticia", "letisha", "letitia", "lettie", "letty", "levi", "levine", "levy",
    "lewis", "lexie", "lezlie", "li", "lia", "liana", "liane", "lianne", "libbie", "libby",
    "librada", "lida", "lidia", "lien", "lieselotte", "ligia", "lila", "lili", "lilia", "lilian",
    "liliana", "lilla", "lilli", "lillia", "lilliam", "lillian", "lilliana", "lillie", "lilly",
    "lin", "lina", "lincoln", "linda", "lindsay", "lindsey", "lindsy", "lindy", "linette", "ling",
    "linh", "linn", "linnea", "linnie", "lino", "linsey", "linwood", "lionel", "lisa", "lisabeth",
    "lisandra", "lisbeth", "lise", "lisette", "lisha", "lissa", "lissette", "lita", "livia",
    "livingston", "liz", "liza", "lizabeth", "lizbeth", "lizeth", "lizette", "lizzette", "lizzie",
    "lloyd", "logan", "loida", "lois", "loise", "lola", "lolita", "loma", "lon", "lona", "londa",
    "loni", "lonna", "lonnie", "lonny", "lopez", "lora", "loraine", "loralee", "lore", "lorean",
    "loree", "loreen", "lorelei", "loren", "lorena", "lorene", "lorenza", "lorenzo", "loreta",
    "loretta", "lorette", "lori", "loria", "loriann", "lorie", "lorilee", "lorina", "lorinda",
    "lorine", "loris", "lorita", "lorna", "lorraine", "lorretta", "lorri", "lorriane", "lorrie",
    "lorrine", "lory", "lott", "lottie", "lou", "louann", "louanne", "louella", "louetta", "louie",
    "louis", "louisa", "louise", "loura", "lourdes", "lourie", "louvenia", "lovella", "lovetta",
    "lovie", "lowe", "lowell", "lowery", "loyce", "loyd", "luana", "luann", "luanna", "luanne",
    "luba", "lucas", "luci", "lucia", "luciana", "luciano", "lucie", "lucien", "lucienne", "lucila",
    "lucile", "lucilla", "lucille", "lucina", "lucinda", "lucio", "lucius", "lucrecia", "lucretia",
    "lucy", "ludie", "ludivina", "lue", "luella", "luetta", "luigi", "luis", "luisa", "luise",
    "lula", "lulu", "luna", "lupe", "lupita", "lura", "lurlene", "lurline", "luther", "luvenia",
    "luz", "lyda", "lydia", "lyla", "lyle", "lyman", "lyn", "lynch", "lynda", "lyndia", "lyndon",
    "lyndsay", "lyndsey", "lynell", "lynelle", "lynetta", "lynette", "lynn", "lynna", "lynne",
    "lynnette", "lynsey", "lynwood", "lyons", "mabel", "mabelle", "mable", "macdonald", "machelle",
    "macias", "macie", "mack", "mackenzie", "macy", "madalene", "madaline", "madalyn", "madden",
    "maddie", "maddox", "madelaine", "madeleine", "madelene", "madeline", "madelyn", "madge",
    "madie", "madison", "madlyn", "madonna", "mae", "maegan", "mafalda", "magali", "magaly",
    "magan", "magaret", "magda", "magdalen", "magdalena", "magdalene", "magen", "maggie",
    "magnolia", "mahalia", "mai", "maia", "maida", "maile", "maira", "maire", "maisha", "maisie",
    "majorie", "makeda", "malcolm", "malcom", "maldonado", "malena", "malia", "malik", "malika",
    "malinda", "malisa", "malissa", "malka", "mallie", "mallory", "malone", "malorie", "malvina",
    "mamie", "mammie", "mana", "manda", "mandi", "mandie", "mandy", "manie", "mann", "manning",
    "manual", "manuel", "manuela", "mao", "maple", "mara", "maragaret", "maragret", "maranda",
    "marc", "marcel", "marcela", "marcelene", "marcelina", "marceline", "marcelino", "marcell",
    "marcella", "marcelle", "marcellus", "marcelo", "marcene", "marchelle", "marci", "marcia",
    "marcie", "marco", "marcos", "marcus", "marcy", "mardell", "maren", "marg", "margaret",
    "margareta", "margarete", "margarett", "margaretta", "margarette", "margarita", "margarite",
    "margarito", "margart", "marge", "margene", "margeret", "margert", "margery", "marget",
    "margherita", "margie", "margit", "margo", "margorie", "margot", "margret", "margrett",
    "marguerita", "marguerite", "margurite", "margy", "marhta", "mari", "maria", "mariah", "mariam",
    "marian", "mariana", "marianela", "mariann", "marianna", "marianne", "mariano", "maribel",
    "maribeth", "marica", "maricela", "maricruz", "marie", "mariel", "mariela", "mariella",
    "marielle", "marietta", "mariette", "mariko", "marilee", "marilou", "marilu", "marilyn",
    "marilynn", "marin", "marina", "marinda", "mario", "marion", "maris", "marisa", "marisela",
    "marisha", "marisol", "marissa", "marita", "maritza", "marivel", "marjorie", "marjory",
    "marketta", "markita", "markus", "marla", "marlana", "marleen", "marlen", "marlena", "marlene",
    "marlin", "marline", "marlo", "marlon", "marlyn", "marlys", "marna", "marni", "marnie",
    "marquerite", "marquetta", "marquez", "marquis", "marquita", "marquitta", "marsh", "marsha",
    "marta", "marth", "martha", "marti", "martin", "martina", "martine", "martinez", "marty",
    "marva", "marvel", "marvella", "marvin", "marvis", "marx", "mary", "marya", "maryalice",
    "maryam", "maryann", "maryanna", "maryanne", "marybelle", "marybeth", "maryellen", "maryetta",
    "maryjane", "maryjo", "maryland", "marylee", "marylin", "maryln", "marylou", "marylouise",
    "marylyn", "marylynn", "maryrose", "masako", "massey", "matha", "mathew", "mathews", "mathilda",
    "mathilde", "mathis", "matilda", "matilde", "matthew", "matthews", "mattie", "maud", "maude",
    "maudie", "maura", "maureen", "maurice", "mauricio", "maurine", "maurita", "mauro", "mavis",
    "maxie", "maxima", "maximina", "maximo", "maxine", "maxwell", "maya", "maybell", "maybelle",
    "maye", "mayer", "mayme", "maynard", "mayo", "mayola", "mayra", "mays", "mazie", "mcbride",
    "mccall", "mccarthy", "mccarty", "mcclain", "mcclure", "mcconnell", "mccormick", "mccoy",
    "mccray", "mccullough", "mcdaniel", "mcdonald", "mcdowell", "mcfadden", "mcfarland", "mcgee",
    "mcgowan", "mcguire", "mcintosh", "mcintyre", "mckay", "mckee", "mckenzie", "mckinley",
    "mckinney", "mcknight", "mclaughlin", "mclean", "mcleod", "mcmahon", "mcmillan", "mcneil",
    "mcpherson", "meadows", "meagan", "meaghan", "mechelle", "meda", "medina", "mee", "meg",
    "megan", "meggan", "meghan", "meghann", "mei", "mejia", "mel", "melaine", "melani", "melania",
    "melanie", "melany", "melba", "melda", "melendez", "melia", "melida", "melina", "melinda",
    "melisa", "melissa", "melissia", "melita", "mellie", "mellisa", "mellissa", "melodee", "melodi",
    "melodie", "melody", "melonie", "melony", "melton", "melva", "melvin", "melvina", "melynda",
    "mendez", "mendoza", "mendy", "mercado", "mercedes", "mercedez", "mercer", "meredith", "meri",
    "merideth", "meridith", "merilyn", "merissa", "merle", "merlene", "merlin", "merlyn", "merna",
    "merri", "merrie", "merrilee", "merrill", "merritt", "merry", "mertie", "mervin", "meryl",
    "meta", "meyer", "meyers", "mia", "mica", "micaela", "micah", "micha", "michael", "michaela",
    "michaele", "michal", "michale", "micheal", "michel", "michele", "michelina", "micheline",
    "michell", "michelle", "michiko", "mickey", "micki", "mickie", "middleton", "miesha",
    "migdalia", "mignon", "miguel", "miguelina", "mika", "mikaela", "mike", "mikel", "miki",
    "mikki", "mila", "milagro", "milagros", "milan", "milda", "mildred", "milford", "milissa",
    "millard", "millicent", "millie", "mills", "milly", "milo", "milton", "mimi", "mina", "minda",
    "mindi", "mindy", "minerva", "ming", "minh", "minna", "minnie", "minta", "miquel", "mira",
    "miranda", "mireille", "mirella", "mireya", "miriam", "mirian", "mirna", "mirta", "mirtha",
    "misha", "missy", "misti", "mistie", "misty", "mitch", "mitchel", "mitchell", "mitsue",
    "mitsuko", "mittie", "mitzi", "mitzie", "miyoko", "modesta", "modesto", "mohamed", "mohammad",
    "mohammed", "moira", "moises", "molina", "mollie", "molly", "mona", "monet", "monica", "monika",
    "monique", "monnie", "monroe", "monserrate", "monte", "montgomery", "montoya", "monty", "moody",
    "mooney", "moore", "mora", "morales", "moran", "moreno", "morgan", "moriah", "morin", "morris",
    "morrison", "morrow", "morse", "morton", "mose", "moses", "moshe", "mosley", "moss", "mozell",
    "mozella", "mozelle", "mueller", "mui", "mullen", "mullins", "munoz", "muoi", "muriel",
    "murphy", "murray", "myers", "myesha", "myles", "myong", "myra", "myriam", "myrl", "myrle",
    "myrna", "myron", "myrta", "myrtice", "myrtie", "myrtis", "myrtle", "myung", "nada", "nadene",
    "nadia", "nadine", "naida", "nakesha", "nakia", "nakisha", "nakita", "nam", "nan", "nana",
    "nancee", "nancey", "nanci", "nancie", "nancy", "nanette", "nannette", "nannie", "naoma",
    "naomi", "napoleon", "narcisa", "nash", "natacha", "natalia", "natalie", "natalya", "natasha",
    "natashia", "nathalie", "nathan", "nathanael", "nathanial", "nathaniel", "natisha", "natividad",
    "natosha", "navarro", "neal", "necole", "ned", "neda", "nedra", "neely", "neida", "neil",
    "nelda", "nelia", "nelida", "nell", "nella", "nelle", "nellie", "nelly", "nelson", "nena",
    "nenita", "neoma", "neomi", "nereida", "nerissa", "nery", "nestor", "neta", "nettie", "neva",
    "nevada", "neville", "newman", "newton", "nga", "ngan", "ngoc", "nguyen", "nguyet", "nia",
    "nichelle", "nichol", "nicholas", "nichole", "nicholle", "nichols", "nicholson", "nicki",
    "nickie", "nickolas", "nickole", "nicky", "nicol", "nicola", "nicolas", "nicolasa", "nicole",
    "nicolette", "nicolle", "nida", "nidia", "nielsen", "niesha", "nieves", "nigel", "niki",
    "nikia", "nikita", "nikki", "nikole", "nila", "nilda", "nilsa", "nina", "ninfa", "nisha",
    "nita", "nixon", "noah", "noble", "nobuko", "noe", "noel", "noelia", "noella", "noelle",
    "noemi", "nohemi", "nola", "nolan", "noma", "nona", "nora", "norah", "norbert", "norberto",
    "noreen", "norene", "noriko", "norine", "norma", "norman", "normand", "norris", "norton",
    "nova", "novella", "nu", "nubia", "nunez", "nydia", "nyla", "obdulia", "obrien", "ochoa",
    "ocie", "oconnor", "octavia", "octavio", "oda", "odelia", "odell", "odessa", "odette", "odilia",
    "odis", "odom", "odonnell", "ofelia", "ola", "olen", "olene", "oleta", "olevia", "olga",
    "olimpia", "olin", "olinda", "oliva", "oliver", "olivia", "ollie", "olsen", "olson", "olympia",
    "oma", "omar", "omega", "omer", "ona", "oneal", "oneida", "oneil", "oneill", "onie", "onita",
    "opal", "ophelia", "ora", "oralee", "oralia", "oren", "oretha", "orlando", "orpha", "orr",
    "ortega", "ortiz", "orval", "orville", "osborn", "osborne", "oscar", "ossie", "osvaldo",
    "oswaldo", "otelia", "otha", "otilia", "otis", "otto", "ouida", "owen", "owens", "ozell",
    "ozella", "ozie", "pablo", "pacheco", "padilla", "paige", "palma", "palmer", "palmira", "pam",
    "pamala", "pamela", "pamelia", "pamella", "pamila", "pamula", "pandora", "pansy", "paola",
    "parks", "parrish", "parsons", "parthenia", "particia", "pasquale", "pasty", "pate", "patel",
    "patria", "patrica", "patrice", "patricia", "patrick", "patrina", "patsy", "patterson", "patti",
    "pattie", "patton", "patty", "paul", "paula", "paulene", "pauletta", "paulette", "paulina",
    "pauline", "paulita", "payne", "paz", "pearle", "pearlene", "pearlie", "pearline", "pearly",
    "pearson", "peck", "pedro", "peg", "peggie", "peggy", "pei", "pena", "penelope", "penney",
    "penni", "pennie", "pennington", "percy", "perez", "perkins", "perla", "perry", "pete", "peter",
    "peters", "petersen", "peterson", "petra", "petrina", "petronila", "petty", "phebe", "phelps",
    "philip", "phillip", "phillips", "phillis", "philomena", "phoebe", "phung", "phuong",
    "phylicia", "phylis", "phyliss", "phyllis", "pia", "pickett", "piedad", "pierce", "pierre",
    "pilar", "ping", "pinkie", "piper", "pittman", "pitts", "pok", "pollard", "polly", "poole",
    "porfirio", "porsche", "porsha", "portia", "potter", "potts", "powell", "pratt", "preston",
    "pricilla", "priscila", "priscilla", "providencia", "prudence", "pruitt", "puckett", "pugh",
    "pura", "qiana", "queenie", "quentin", "quiana", "quincy", "quinn", "quintin", "quinton",
    "quyen", "rachael", "rachal", "racheal", "rachel", "rachele", "rachell", "rachelle", "racquel",
    "rae", "raeann", "raelene", "rafael", "rafaela", "raguel", "raina", "raisa", "raleigh", "ralph",
    "ramirez", "ramiro", "ramon", "ramona", "ramonita", "ramos", "ramsey", "rana", "ranae", "randa",
    "randal", "randall", "randee", "randell", "randi", "randolph", "randy", "ranee", "raphael",
    "raquel", "rashad", "rasheeda", "rashida", "rasmussen", "ratliff", "raul", "raven", "raye",
    "rayford", "raylene", "raymon", "raymond", "raymonde", "raymundo", "rayna", "rea", "reagan",
    "reanna", "reatha", "reba", "rebbeca", "rebbecca", "rebeca", "rebecca", "rebecka", "rebekah",
    "reda", "reed", "reena", "reese", "reeves", "refugia", "refugio", "regan", "regena", "regenia",
    "reggie", "regina", "reginald", "regine", "reginia", "reid", "reiko", "reilly", "reina",
    "reinaldo", "reita", "rema", "remedios", "remona", "rena", "renae", "renaldo", "renata",
    "renate", "renato", "renay", "renda", "rene", "renea", "renee", "renetta", "renita", "renna",
    "ressie", "reta", "retha", "retta", "reuben", "reva", "rex", "rey", "reyes", "reyna",
    "reynalda", "reynaldo", "reynolds", "rhea", "rheba", "rhett", "rhiannon", "rhoda", "rhodes",
    "rhona", "rhonda", "ria", "ricarda", "ricardo", "richard", "richards", "richardson", "richelle",
    "richie", "richmond", "rick", "rickey", "ricki", "rickie", "ricky", "rico", "riddle", "riggs",
    "rigoberto", "rikki", "riley", "rima", "rina", "rios", "risa", "rita", "riva", "rivas",
    "rivera", "rivers", "rivka", "roach", "robbi", "robbie", "robbin", "robbins", "robby", "robbyn",
    "robena", "roberson", "robert", "roberta", "roberto", "roberts", "robertson", "robinson",
    "robles", "robt", "robyn", "rocco", "rocha", "rochel", "rochell", "rochelle", "rocio",
    "roderick", "rodger", "rodgers", "rodney", "rodolfo", "rodrick", "rodrigo", "rodriguez",
    "rodriquez", "rogelio", "roger", "rogers", "rojas", "roland", "rolanda", "rolande", "rolando",
    "rolf", "rolland", "rollins", "roma", "romaine", "romana", "romelia", "romeo", "romero",
    "romona", "rona", "ronald", "ronda", "roni", "ronna", "ronni", "ronnie", "ronny", "roosevelt",
    "rory", "rosa", "rosalba", "rosalee", "rosales", "rosalia", "rosalie", "rosalina", "rosalind",
    "rosalinda", "rosaline", "rosalva", "rosalyn", "rosamaria", "rosamond", "rosana", "rosann",
    "rosanna", "rosanne", "rosaria", "rosario", "rosaura", "roscoe", "roseann", "roseanna",
    "roseanne", "roselee", "roselia", "roseline", "rosella", "roselle", "roselyn", "rosemarie",
    "rosemary", "rosena", "rosenda", "rosendo", "rosetta", "rosette", "rosia", "rosie", "rosina",
    "rosio", "rosita", "roslyn", "ross", "rossana", "rossie", "rosy", "roth", "rowe", "rowena",
    "rowland", "roxana", "roxane", "roxann", "roxanna", "roxanne", "roxie", "roxy", "roy", "royce",
    "rozanne", "rozella", "ruben", "rubi", "rubie", "rubin", "rubye", "rudolf", "rudolph", "rudy",
    "rueben", "rufina", "rufus", "ruiz", "rupert", "russ", "russel", "russell", "russo", "ruth",
    "rutha", "ruthann", "ruthanne", "ruthe", "ruthie", "rutledge", "ryan", "ryann", "sabina",
    "sabine", "sabra", "sabrina", "sacha", "sachiko", "sade", "sadie", "sadye", "sal", "salas",
    "salazar", "salena", "salina", "salinas", "salley", "sallie", "sally", "salome", "salvador",
    "salvatore", "samantha", "samara", "samatha", "samella", "samira", "sammie", "sammy", "sampson",
    "samual", "samuel", "sana", "sanchez", "sanda", "sandee", "sanders", "sandi", "sandie",
    "sandoval", "sandra", "sanford", "sang", "sanjuana", "sanjuanita", "sanora", "santana",
    "santiago", "santina", "santo", "santos", "sara", "sarah", "sarai", "saran", "sargent", "sari",
    "sarina", "sarita", "sasha", "saturnina", "sau", "saul", "saunders", "saundra", "savage",
    "savanna", "savannah", "sawyer", "scarlet", "scarlett", "schmidt", "schneider", "schroeder",
    "schultz", "schwartz", "scot", "scott", "scottie", "scotty", "sean", "sears", "sebastian",
    "sebrina", "seema", "selena", "selene", "selina", "sellers", "selma", "sena", "senaida",
    "serafina", "serena", "sergio", "serina", "serita", "serrano", "seth", "setsuko", "sexton",
    "seymour", "sha", "shad", "shae", "shaffer", "shaina", "shakia", "shakira", "shakita", "shala",
    "shalanda", "shalon", "shalonda", "shameka", "shamika", "shan", "shana", "shanae", "shanda",
    "shandi", "shandra", "shane", "shaneka", "shanel", "shanell", "shanelle", "shani", "shanice",
    "shanika", "shaniqua", "shanita", "shanna", "shannan", "shannon", "shanon", "shanta", "shantae",
    "shantay", "shante", "shantel", "shantell", "shantelle", "shanti", "shaquana", "shaquita",
    "shara", "sharan", "sharda", "sharee", "sharell", "sharen", "shari", "sharice", "sharie",
    "sharika", "sharilyn", "sharita", "sharla", "sharleen", "sharlene", "sharmaine", "sharolyn",
    "sharon", "sharonda", "sharpe", "sharri", "sharron", "sharyl", "sharyn", "shasta", "shaun",
    "shauna", "shaunda", "shaunna", "shaunta", "shaunte", "shavon", "shavonda", "shavonne", "shaw",
    "shawana", "shawanda", "shawanna", "shawn", "shawna", "shawnda", "shawnee", "shawnna",
    "shawnta", "shay", "shayla", "shayna", "shayne", "shea", "sheba", "sheena", "sheila", "sheilah",
    "shela", "shelba", "shelby", "sheldon", "shelia", "shella", "shelley", "shelli", "shellie",
    "shelly", "shelton", "shemeka", "shemika", "shena", "shenika", "shenita", "shenna", "shepard",
    "shepherd", "sheppard", "shera", "sheree", "sherell", "sheri", "sherice", "sheridan", "sherie",
    "sherika", "sherill", "sherilyn", "sherise", "sherita", "sherlene", "sherley", "sherly",
    "sherlyn", "sherman", "sheron", "sherrell", "sherri", "sherrie", "sherril", "sherrill",
    "sherron", "sherry", "sherryl", "sherwood", "shery", "sheryl", "sheryll", "shiela", "shields",
    "shila", "shiloh", "shin", "shira", "shirely", "shirl", "shirlee", "shirleen", "shirlene",
    "shirley", "shirly", "shizue", "shizuko", "shon", "shona", "shonda", "shondra", "shonna",
    "shonta", "shoshana", "shu", "shyla", "sibyl", "sid", "sidney", "sierra", "signe", "sigrid",
    "silas", "silva", "silvana", "silvia", "sima", "simmons", "simona", "simone", "simonne",
    "simpson", "sims", "sina", "sindy", "singleton", "siobhan", "sirena", "siu", "sixta", "skinner",
    "skye", "slater", "sloan", "slyvia", "smith", "snider", "snyder", "socorro", "sofia", "soila",
    "sol", "solange", "soledad", "solis", "solomon", "somer", "sommer", "sona", "sondra", "sonia",
    "sonja", "sonny", "sonya", "soo", "sook", "sophia", "sophie", "soraya", "sosa", "soto",
    "sparkle", "sparks", "spears", "spence", "spencer", "stacee", "stacey", "staci", "stacia",
    "stacie", "stacy", "stafford", "stan", "stanford", "stanley", "stanton", "stark", "starla",
    "starr", "stasia", "steele", "stefan", "stefani", "stefania", "stefanie", "stefany",
    "steffanie", "stein", "stella", "stepanie", "stephaine", "stephan", "stephane", "stephani",
    "stephania", "stephanie", "stephany", "stephen", "stephenie", "stephens", "stephenson",
    "stephine", "stephnie", "sterling", "steve", "steven", "stevens", "stevenson", "stevie",
    "stewart", "stokes", "stormy", "stout", "strickland", "stuart", "suanne", "suarez", "sudie",
    "sueann", "suellen", "suk", "sulema", "sullivan", "sumiko", "summers", "sung", "sunni",
    "sunshine", "susan", "susana", "susann", "susanna", "susannah", "susanne", "susie", "susy",
    "sutton", "suzan", "suzann", "suzanna", "suzanne", "suzette", "suzi", "suzie", "suzy",
    "svetlana", "swanson", "sweeney", "sybil", "syble", "sykes", "sylvester", "sylvia", "sylvie",
    "synthia", "syreeta", "tabatha", "tabetha", "tabitha", "tad", "tai", "taina", "taisha",
    "tajuana", "takako", "takisha", "talia", "talisha", "talitha", "talley", "tam", "tama",
    "tamala", "tamar", "tamara", "tamatha", "tambra", "tameika", "tameka", "tamekia", "tamela",
    "tamera", "tamesha", "tami", "tamica", "tamie", "tamika", "tamiko", "tamisha", "tammara",
    "tammera", "tammi", "tammie", "tammy", "tamra", "tana", "tandra", "tandy", "taneka", "tanesha",
    "tangela", "tania", "tanika", "tanisha", "tanja", "tanna", "tanner", "tanya", "tara", "tarah",
    "taren", "tari", "tarra", "tarsha", "taryn", "tasha", "tashia", "tashina", "tasia", "tate",
    "tatiana", "tatum", "tatyana", "taunya", "tawana", "tawanda", "tawanna", "tawna", "tawny",
    "tawnya", "tayna", "ted", "teddy", "teena", "tegan", "teisha", "telma", "temeka", "temika",
    "tempie", "tena", "tenesha", "tenisha", "tennie", "tennille", "teodora", "teodoro", "teofila",
    "tequila", "tera", "tereasa", "terence", "teresa", "terese", "teresia", "teresita", "teressa",
    "teri", "terica", "terina", "terisa", "terra", "terrance", "terrell", "terrence", "terresa",
    "terri", "terrie", "terrilyn", "terry", "tesha", "tess", "tessa", "tessie", "thad", "thaddeus",
    "thalia", "thanh", "thao", "thea", "theda", "thelma", "theo", "theodora", "theodore", "theola",
    "theresa", "therese", "theresia", "theressa", "theron", "thersa", "thi", "thomas", "thomasena",
    "thomasina", "thomasine", "thompson", "thora", "thornton", "thresa", "thu", "thurman", "thuy",
    "tia", "tiana", "tianna", "tiara", "tien", "tiera", "tierra", "tiesha", "tifany", "tiffaney",
    "tiffani", "tiffanie", "tiffany", "tiffiny", "tijuana", "tilda", "tillie", "tillman", "timika",
    "timmy", "timothy", "tina", "tinisha", "tisa", "tish", "tisha", "titus", "tobi", "tobias",
    "tobie", "toby", "toccara", "tod", "todd", "toi", "tomas", "tomasa", "tomeka", "tomi", "tomika",
    "tomiko", "tommie", "tommy", "tommye", "tomoko", "tona", "tonda", "tonette", "toney", "toni",
    "tonia", "tonie", "tonisha", "tonita", "tonja", "tony", "tonya", "tora", "tori", "torie",
    "torres", "torri", "torrie", "tory", "tosha", "toshia", "toshiko", "tova", "towanda",
    "townsend", "toya", "tracee", "tracey", "traci", "tracie", "tracy", "tran", "trang", "travis",
    "treasa", "treena", "trena", "trent", "trenton", "tresa", "tressa", "tressie", "treva",
    "trevino", "trevor", "trey", "tricia", "trina", "trinh", "trinidad", "trinity", "trish",
    "trisha", "trista", "tristan", "troy", "trudi", "trudie", "trudy", "trujillo", "trula",
    "truman", "tu", "tuan", "tucker", "tula", "tuyet", "twana", "twanda", "twanna", "twila",
    "twyla", "ty", "tyesha", "tyisha", "tyler", "tynisha", "tyra", "tyree", "tyrell", "tyron",
    "tyrone", "tyson", "ula", "ulrike", "ulysses", "una", "underwood", "ursula", "usha", "ute",
    "vada", "val", "valarie", "valda", "valdez", "valencia", "valene", "valentin", "valentina",
    "valentine", "valenzuela", "valeri", "valeria", "valerie", "valery", "vallie", "valorie",
    "valrie", "vance", "vanda", "vanesa", "vanessa", "vanetta", "vang", "vania", "vanita", "vanna",
    "vannesa", "vannessa", "vargas", "vashti", "vasiliki", "vasquez", "vaughan", "vaughn",
    "vazquez", "veda", "vega", "velasquez", "velazquez", "velda", "velez", "velia", "vella",
    "velma", "velva", "vena", "venessa", "venetta", "venice", "venita", "vennie", "venus", "veola",
    "vera", "verda", "verdell", "verdie", "verena", "vergie", "verla", "verlene", "verlie",
    "verline", "vern", "verna", "vernell", "vernetta", "vernia", "vernice", "vernie", "vernita",
    "vernon", "verona", "veronica", "veronika", "veronique", "versie", "vertie", "vesta", "veta",
    "vicenta", "vicente", "vickey", "vicki", "vickie", "vicky", "victor", "victoria", "victorina",
    "vida", "viki", "vikki", "villarreal", "vilma", "vina", "vince", "vincent", "vincenza",
    "vincenzo", "vinita", "vinnie", "vinson", "viola", "violeta", "violette", "virgen", "virgie",
    "virgil", "virgilio", "virgina", "virginia", "vita", "vito", "viva", "vivan", "vivian",
    "viviana", "vivien", "vivienne", "von", "voncile", "vonda", "vonnie", "wade", "wagner", "wai",
    "waldo", "wallace", "waller", "wally", "walsh", "walter", "walters", "walton", "waltraud",
    "wan", "wanda", "waneta", "wanetta", "wanita", "ware", "warner", "warren", "washington",
    "watkins", "watson", "watts", "wava", "waylon", "wayne", "weaver", "webb", "weber", "webster",
    "wei", "weiss", "welch", "weldon", "wells", "wen", "wendell", "wendi", "wendie", "wendolyn",
    "wendy", "wenona", "werner", "wes", "wesley", "weston", "wheeler", "whitaker", "whitehead",
    "whitfield", "whitley", "whitney", "wiggins", "wilber", "wilbert", "wilbur", "wilburn",
    "wilcox", "wilda", "wilder", "wiley", "wilford", "wilfred", "wilfredo", "wilhelmina",
    "wilhemina", "wilkerson", "wilkins", "wilkinson", "willa", "willard", "willena", "willene",
    "willetta", "willette", "willia", "william", "williams", "williamson", "willian", "willie",
    "williemae", "willis", "willodean", "willow", "willy", "wilma", "wilmer", "wilson", "wilton",
    "winford", "winfred", "winifred", "winnie", "winnifred", "winona", "winston", "winters", "witt",
    "wm", "wolfe", "wonda", "wong", "woodard", "woodrow", "woodward", "wooten", "workman", "wright",
    "wyatt", "wynell", "wynn", "wynona", "xavier", "xenia", "xiao", "xiomara", "xochitl", "xuan",
    "yadira", "yaeko", "yael", "yahaira", "yajaira", "yan", "yang", "yanira", "yasmin", "yasmine",
    "yasuko", "yates", "yee", "yelena", "yen", "yer", "yesenia", "yessenia", "yetta", "yevette",
    "yi", "ying", "yoko", "yolanda", "yolande", "yolando", "yolonda", "yon", "yong", "yoshie",
    "yoshiko", "youlanda", "yuette", "yuk", "yuki", "yukiko", "yuko", "yulanda", "yun", "yung",
    "yuonne", "yuri", "yuriko", "yvette", "yvone", "yvonne", "zachariah", "zachary", "zachery",
    "zack", "zackary", "zada", "zaida", "zamora", "zana", "zandra", "zane", "zelda", "zella",
    "zelma", "zena", "zenaida", "zenia", "zenobia", "zetta", "zimmerman", "zina", "zita", "zoe",
    "zofia", "zoila", "zola", "zona", "zonia", "zora", "zoraida", "zula", "zulema", "zulma",
];
