#include <string>

namespace tcms {

// Bundled English stopword list; mirrors data/stopwords_english.txt.
extern const char* const kDefaultStopwordText;
const char* const kDefaultStopwordText =
    "a\nabout\nabove\nafter\nagain\nagainst\nall\nalmost\nalone\n"
    "along\nalready\nalso\nalthough\nalways\nam\namong\nan\nand\n"
    "another\nany\nanybody\nanyone\nanything\nanywhere\nare\n"
    "area\naround\nas\nat\nback\nbe\nbecame\nbecause\nbecome\n"
    "becomes\nbeen\nbefore\nbehind\nbeing\nbelow\nbetween\nboth\n"
    "but\nby\ncame\ncan\ncannot\ncould\ndid\ndo\ndoes\ndoing\n"
    "done\ndown\nduring\neach\neither\nenough\neven\never\n"
    "every\neverybody\neveryone\neverything\neverywhere\nfew\n"
    "for\nfrom\nfurther\nget\ngets\ngive\ngiven\ngo\ngoes\n"
    "going\ngot\nhad\nhas\nhave\nhaving\nhe\nher\nhere\nhers\n"
    "herself\nhim\nhimself\nhis\nhow\nhowever\ni\nif\nin\ninto\n"
    "is\nit\nits\nitself\njust\nkeep\nkind\nknew\nknow\nlast\n"
    "later\nleast\nless\nlet\nlike\nlikely\nmade\nmake\nmaking\n"
    "many\nmay\nme\nmight\nmore\nmost\nmuch\nmust\nmy\nmyself\n"
    "near\nneed\nnever\nnew\nnext\nno\nnobody\nnone\nnor\nnot\n"
    "nothing\nnow\nnowhere\nof\noff\noften\nold\non\nonce\none\n"
    "only\nonto\nor\nother\nothers\nour\nours\nourselves\nout\n"
    "over\nown\npart\nper\nperhaps\nput\nquite\nrather\nreally\n"
    "said\nsame\nsaw\nsay\nsays\nsee\nseem\nseemed\nseeming\n"
    "seems\nseveral\nshall\nshe\nshould\nsince\nso\nsome\n"
    "somebody\nsomeone\nsomething\nsomewhere\nstill\nsuch\ntake\n"
    "taken\nthan\nthat\nthe\ntheir\ntheirs\nthem\nthemselves\n"
    "then\nthere\ntherefore\nthese\nthey\nthing\nthings\nthink\n"
    "this\nthose\nthough\nthrough\nthus\nto\ntogether\ntoo\n"
    "toward\nturn\nunder\nuntil\nup\nupon\nus\nuse\nused\nuses\n"
    "very\nwas\nway\nwe\nwell\nwent\nwere\nwhat\nwhatever\nwhen\n"
    "where\nwhether\nwhich\nwhile\nwho\nwhole\nwhom\nwhose\nwhy\n"
    "will\nwith\nwithin\nwithout\nwould\nyet\nyou\nyour\nyours\n"
    "yourself\nyourselves\n";

} // namespace tcms
