window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#crate-layout","rotations-and-squeezes.html#rotations-squeezes-and-the-series-exponential","rotations-and-squeezes.html#the-series-exponential","attenuated-medium.html#the-attenuated-rotator","attenuated-medium.html#three-regimes","attenuated-medium.html#closed-form-against-the-defining-product","polarization.html#polarization-states-and-trajectories","polarization.html#propagation","polarization.html#trajectories","little-groups.html#little-groups-and-the-2x2-to-4x4-lift","little-groups.html#the-lift","little-groups.html#three-four-momenta-three-little-groups","little-groups.html#the-gauge-matrix-and-the-parabolic-medium","cli.html#command-line-reference","cli.html#classify","cli.html#transfer","cli.html#propagate","cli.html#conventions","cli.html#sweep","cli.html#littlegroup"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":2.8284271247461903},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"2":{"tf":2.449489742783178},"4":{"tf":2.23606797749979},"6":{"tf":1.4142135623730951}},"df":9,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":2.449489742783178},"9":{"tf":1.4142135623730951}},"df":6,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"1":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"2":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"3":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":7,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"4":{"docs":{"11":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":2,"5":{"docs":{"7":{"tf":1.0}},"df":1}},"5":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0}},"df":7,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"6":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}},"7":{"docs":{"11":{"tf":1.0}},"df":1,"0":{"docs":{},"df":0,"7":{"docs":{},"df":0,"1":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}},"5":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"12":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}},"8":{"docs":{"3":{"tf":1.0}},"df":1},"9":{"docs":{"19":{"tf":1.0}},"df":1}}},"1":{"docs":{"11":{"tf":1.0},"13":{"tf":2.6457513110645907},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":2.6457513110645907},"20":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":9,"+":{"docs":{},"df":0,"2":{"docs":{},"df":0,"g":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}},",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"9":{"docs":{},"df":0,".":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":2.23606797749979}},"df":6,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"2":{"tf":1.7320508075688772},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}},"1":{"docs":{"19":{"tf":1.0}},"df":1,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"2":{"docs":{},"df":0,"5":{"docs":{"12":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"3":{"docs":{"7":{"tf":1.0}},"df":1},"4":{"docs":{"9":{"tf":1.0}},"df":1},"5":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}},"df":3,"7":{"docs":{},"df":0,"0":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"3":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"0":{"docs":{"3":{"tf":1.0}},"df":1,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"2":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":6},"3":{"docs":{"11":{"tf":2.23606797749979},"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":3},"5":{"docs":{"2":{"tf":2.449489742783178},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":5},"6":{"docs":{"20":{"tf":1.0}},"df":1},"7":{"docs":{"14":{"tf":1.0}},"df":1},"e":{"docs":{"11":{"tf":2.449489742783178},"12":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"2":{"tf":2.449489742783178},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"6":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772},"9":{"tf":1.7320508075688772}},"df":11}},"2":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951}},"df":8,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"k":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"4":{"docs":{},"df":0,"9":{"docs":{},"df":0,"8":{"docs":{},"df":0,"4":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"5":{"docs":{},"df":0,"4":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.7320508075688772},"5":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5},"5":{"docs":{},"df":0,"0":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"8":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"9":{"docs":{},"df":0,"2":{"docs":{},"df":0,"4":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"g":{"docs":{"13":{"tf":2.23606797749979}},"df":1,"^":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.7320508075688772}},"df":1}}},"x":{"docs":{},"df":0,"2":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":6}}},"3":{"docs":{"12":{"tf":1.0},"6":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"z":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}},"4":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"6":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}},"5":{"docs":{"2":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2},"x":{"docs":{},"df":0,"4":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"6":{"tf":1.0}},"df":5}}},"5":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}},"6":{"docs":{"16":{"tf":1.0}},"df":1},"7":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1},"3":{"docs":{"3":{"tf":1.0}},"df":1}}},"8":{"docs":{"14":{"tf":1.0},"9":{"tf":1.0}},"df":2},"9":{"docs":{"11":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"2":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"_":{"docs":{"5":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"t":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}},"v":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":12}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2,"g":{"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"2":{"tf":1.4142135623730951},"4":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":2.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"14":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0},"7":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":3}}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.7320508075688772}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"17":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"z":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"4":{"docs":{},"df":0,"5":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{"2":{"tf":1.0}},"df":1},"2":{"docs":{"2":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"4":{"docs":{"6":{"tf":1.0}},"df":1},"5":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"h":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"w":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"z":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"z":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1},"5":{"docs":{"5":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{"3":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{"2":{"tf":1.0}},"df":1}},"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"j":{"docs":{"2":{"tf":1.4142135623730951}},"df":1},"k":{"docs":{},"df":0,"1":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}},"j":{"docs":{"2":{"tf":1.0}},"df":1},"k":{"docs":{"5":{"tf":1.0}},"df":1,"1":{"docs":{"2":{"tf":1.0}},"df":1},"2":{"docs":{"2":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":5}}}}},"x":{"docs":{"2":{"tf":1.0}},"df":1,"i":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}}},"b":{"docs":{"11":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}},")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3}}}},"s":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.0}},"df":1},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}},"t":{"docs":{"3":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}},"w":{"docs":{"5":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":2.6457513110645907},"13":{"tf":1.0},"20":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"w":{"docs":{"11":{"tf":1.0}},"df":1}}},"z":{"docs":{"11":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1},"t":{"docs":{"17":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}},"c":{"docs":{"4":{"tf":2.0},"5":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.4142135623730951}},"df":1,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}},"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.7320508075688772}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":5}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"3":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0}},"df":2,"i":{"docs":{"15":{"tf":1.0},"5":{"tf":1.0}},"df":2},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":2.0}},"df":1}}}}}}}}}}}}}},"i":{"docs":{"1":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":7}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"2":{"tf":1.0}},"df":2}}},"e":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4},"s":{"docs":{"13":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1}},"h":{"docs":{"12":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}},"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":5,"’":{"docs":{"0":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}},"df":4,"/":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"4":{"docs":{"6":{"tf":1.4142135623730951}},"df":1},"5":{"docs":{"6":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"20":{"tf":1.0}},"df":1}},"y":{"docs":{"4":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"9":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":2.0},"5":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0}},"df":2}}},"t":{"docs":{"11":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":2.0}},"df":1}}},"w":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"11":{"tf":1.0},"12":{"tf":2.449489742783178},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"19":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2},"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{"7":{"tf":1.0}},"df":1}}}},"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"20":{"tf":1.0}},"df":4}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1},"t":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"df":6}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951}},"df":2}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":2.0},"15":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":3.1622776601683795}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"5":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{"7":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}},"r":{"docs":{"17":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3,"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":4}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"t":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{"3":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.0}},"df":1}}}},"g":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}},"j":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}},"s":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"y":{"docs":{"7":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}},"r":{"docs":{"17":{"tf":1.0}},"df":1}}}},"f":{"docs":{"7":{"tf":1.7320508075688772}},"df":1,"6":{"docs":{},"df":0,"4":{"docs":{"14":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":2.23606797749979}},"df":3}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"v":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"x":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":12},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":10,"a":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"20":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":2.0}},"df":1}}},"e":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1,"z":{"docs":{"9":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}}},"g":{"docs":{"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":4,"^":{"docs":{},"df":0,"2":{"docs":{"4":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"4":{"tf":2.449489742783178},"5":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":10,"^":{"docs":{},"df":0,"2":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}}},"u":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"20":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"3":{"docs":{"13":{"tf":1.0}},"df":1},"7":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":2.23606797749979},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772}},"df":5}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}},"t":{"docs":{"0":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":2.23606797749979},"20":{"tf":1.0}},"df":5}},"w":{"docs":{"18":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":4,"t":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"h":{"docs":{"4":{"tf":2.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"x":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"n":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"j":{"docs":{"1":{"tf":1.0},"2":{"tf":2.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{"12":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"9":{"docs":{"7":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2}}}},"k":{"docs":{"15":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":2.6457513110645907},"9":{"tf":1.0}},"df":4,"1":{"docs":{"1":{"tf":1.0},"2":{"tf":2.23606797749979}},"df":2,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"2":{"docs":{"1":{"tf":1.0},"2":{"tf":2.23606797749979},"4":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{"11":{"tf":1.0},"20":{"tf":1.0}},"df":2,"^":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.4142135623730951},"4":{"tf":2.23606797749979},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":6,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1},"v":{"docs":{"10":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{"4":{"tf":1.0}},"df":1}},"h":{"docs":{"11":{"tf":1.0}},"df":1},"i":{"docs":{"18":{"tf":1.0}},"df":1,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":2}}}}},"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":2.0},"13":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":5,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"b":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}},"a":{"docs":{"11":{"tf":1.4142135623730951}},"df":1},"b":{"docs":{"11":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":2.0},"20":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0},"20":{"tf":1.7320508075688772}},"df":2,"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"k":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0}},"df":3}}}}},"s":{"docs":{},"df":0,"s":{"docs":{"19":{"tf":1.0},"4":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{"11":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.0}},"df":1}},"2":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.0}},"df":1}}}},"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"^":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":12}},"k":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}},"p":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":2},"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"v":{"docs":{"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"20":{"tf":1.0}},"df":3}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951}},"df":2}}}}}},"t":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.7320508075688772},"3":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"4":{"docs":{"1":{"tf":1.0}},"df":1},"c":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0}},"df":4},"x":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":10}}}},"x":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":2.0},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"13":{"tf":2.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":8,"\'":{"docs":{"2":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"6":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"9":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"9":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}}}}}}}}}}},"’":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5}}}}}}},"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1,"u":{"docs":{"7":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"20":{"tf":2.0}},"df":4}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951}},"df":1,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{"14":{"tf":1.0},"19":{"tf":2.0},"4":{"tf":3.1622776601683795},"5":{"tf":1.7320508075688772},"6":{"tf":1.0},"9":{"tf":1.0}},"df":6,",":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"m":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"m":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"m":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"m":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"1":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":6},"2":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":6},"^":{"docs":{},"df":0,"2":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":2.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"df":5,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"x":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1},"h":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}},"b":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1}}}},"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.0}},"df":8,"c":{"docs":{"0":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":9,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}},"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1},"z":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}}}}}}}}}}}},"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}},"{":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951},"2":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{"12":{"tf":2.6457513110645907},"9":{"tf":1.4142135623730951}},"df":2,".":{"docs":{},"df":0,"z":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"9":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2}}},"m":{"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"20":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0}},"df":7,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"13":{"tf":1.4142135623730951}},"df":2,"e":{"docs":{},"df":0,"’":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"df":3}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.7320508075688772},"7":{"tf":1.7320508075688772}},"df":2},"4":{"docs":{"18":{"tf":1.7320508075688772},"7":{"tf":1.7320508075688772}},"df":2}},"n":{"docs":{"5":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}},"u":{"docs":{"20":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.7320508075688772},"17":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":5}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":4}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.4142135623730951}},"df":1,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"[":{"docs":{},"df":0,"[":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"]":{"docs":{},"df":0,"]":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"9":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{"2":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{"2":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}},"l":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4}},"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":3}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"19":{"tf":1.0},"5":{"tf":1.7320508075688772}},"df":7,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}},"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}},"l":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}}},"t":{"docs":{"12":{"tf":1.7320508075688772}},"df":1},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"h":{"docs":{"11":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"z":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"t":{"docs":{"0":{"tf":2.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.7320508075688772},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":10,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"9":{"docs":{"11":{"tf":1.0}},"df":1}}},"k":{"docs":{"5":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"w":{"docs":{"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}},"df":5}},"u":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"s":{"docs":{"2":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":4,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"1":{"docs":{"11":{"tf":1.4142135623730951}},"df":1},"2":{"docs":{"11":{"tf":1.4142135623730951}},"df":1},"3":{"docs":{"11":{"tf":1.4142135623730951}},"df":1},"4":{"docs":{},"df":0,"5":{"docs":{"2":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0}},"df":3},"p":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2}}},"v":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}},"e":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0}},"df":2,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":2.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":6,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":2.0},"5":{"tf":1.4142135623730951}},"df":2}}}}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.7320508075688772}},"df":1}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1}},"e":{"docs":{"2":{"tf":1.4142135623730951}},"df":1},"g":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"h":{"docs":{"12":{"tf":1.0}},"df":1}},"t":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2},"z":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"17":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951}},"df":2}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":10,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"4":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"x":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.4142135623730951},"2":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}},"w":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"’":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":6,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1},"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"16":{"tf":1.7320508075688772},"19":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"9":{"tf":1.0}},"df":7}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"m":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0}},"df":2,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{"11":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.7320508075688772}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":6}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"df":3}}}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.7320508075688772},"2":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":11,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}},"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0}},"df":4}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}},"p":{"docs":{"14":{"tf":1.0}},"df":1,"l":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}},"t":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"df":7}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"2":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"t":{"docs":{"0":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}},"p":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"5":{"tf":1.0}},"df":4},"s":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":2.0},"12":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"2":{"tf":2.0},"3":{"tf":2.0},"4":{"tf":1.0},"5":{"tf":2.23606797749979},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":12,"a":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"f":{"docs":{"14":{"tf":1.0}},"df":1}}},"v":{"docs":{"11":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"u":{"docs":{"14":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":4}}}}},"i":{"docs":{},"df":0,"a":{"docs":{"6":{"tf":1.0}},"df":1}}},"w":{"docs":{"11":{"tf":1.7320508075688772}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"9":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":2.8284271247461903},"12":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":8},"y":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":2.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772},"2":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":8,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}},"z":{"docs":{"0":{"tf":1.0},"11":{"tf":2.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"4":{"tf":2.6457513110645907},"5":{"tf":2.23606797749979},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":13,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"5":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1}}},"/":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"2":{"docs":{},"df":0,"x":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0}},"df":4}}},"4":{"docs":{},"df":0,"x":{"docs":{},"df":0,"4":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0}},"df":4}}},"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":7}}}}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951}},"df":2}}}}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":4}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0}},"df":2}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0}},"df":4}},"n":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":7}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":7}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":5}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951}},"df":2}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}},"title":{"root":{"docs":{},"df":0,"2":{"docs":{},"df":0,"x":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}}},"4":{"docs":{},"df":0,"x":{"docs":{},"df":0,"4":{"docs":{"10":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"optact models light propagating along z through a medium that does two\\nthings at once: it rotates the polarization plane (optical activity, at a\\nrotary power gamma in radians per unit length) and it absorbs the two\\ntransverse field components at different rates ( mu1 along x, mu2 along\\ny). Each effect alone is a textbook 2x2 Jones matrix. Their combination at a\\nmicroscopic scale, repeated until it accumulates to a macroscopic distance,\\nis where it gets interesting: the two generators do not commute, and the\\ncombined generator cannot be diagonalized by a unitary transformation. The library computes that combined transfer matrix three independent ways —\\na closed form valid across all parameter regimes, a truncated series\\nexponential, and the literal N-step microscopic product — and they are\\nrequired to agree. On top of the 2x2 engine sit two consumers: a polarization\\nlayer that pushes Jones states through the medium and reads out intensity,\\nazimuth, and ellipticity; and a relativity layer that lifts each unimodular\\n2x2 transfer matrix to a 4x4 Lorentz transformation, where rotations become\\nrotations, squeezes become boosts, and the degenerate shear becomes the gauge\\ntransformation of a massless particle’s little group. A first taste: #![allow(unused)] fn main() {\\nuse optact::medium::{transfer_closed, MediumParams};\\nuse optact::optics::{propagate, summarize, JonesState}; // Rotary power 2 rad per unit length; y attenuates harder than x.\\nlet params = MediumParams::new(2.0, 0.1, 0.3);\\nlet transfer = transfer_closed(&params, 1.0); // Push linearly polarized light through one unit of the medium.\\nlet state = propagate(&JonesState::linear_x(), &transfer.matrix);\\nlet summary = summarize(&state); assert!(summary.intensity_total < 1.0); // the medium absorbs\\nassert!(summary.azimuth.abs() > 0.5); // and rotates\\nprintln!(\\"regime: {}\\", transfer.regime.name()); // \\"elliptic\\" here } The chapters that follow build the machinery bottom-up. Every code block in\\nthis guide compiles and runs as part of the crate’s test suite, so the book\\ncannot drift from the library.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"Module Contents mat2 2x2 matrices, the generator triple J, K1, K2, series exponential mat4 4x4 matrices, four-vectors, the Minkowski form medium medium parameters, regime classification, closed-form and product transfer optics Jones states, rotation/squeeze constructors, summaries, trajectories littlegroup boosts, the lift, rapidities, little-group elements The optact binary (in the companion optact-cli crate) exposes the same\\nfunctionality as five subcommands with deterministic CSV/JSON output; see the command-line reference.","breadcrumbs":"Introduction » Crate layout","id":"1","title":"Crate layout"},"10":{"body":"The punchline of the crate: the 2x2 transfer matrices of the previous\\nchapters are, up to a two-to-one map, Lorentz transformations — and the three\\nregimes of the medium correspond to the three little groups, the subgroups of\\nthe Lorentz group that leave a particle’s four-momentum invariant.","breadcrumbs":"Little groups and the 2x2 to 4x4 lift » Little groups and the 2x2 to 4x4 lift","id":"10","title":"Little groups and the 2x2 to 4x4 lift"},"11":{"body":"Identify a four-vector v = (x, y, z, t) with the 2x2 coordinate matrix X = t I + x s1 + y s2 + z s3 (Pauli matrices s1, s2, s3), and let a real\\nunimodular M act by X -> M X M^T. The Minkowski form is -det X, and\\ndeterminants multiply, so the action is a Lorentz transformation. lift\\nreads the resulting 4x4 off the basis vectors: #![allow(unused)] fn main() {\\nuse optact::littlegroup::{boost_x, boost_z, lift, rot_zx};\\nuse optact::optics::{rotation, squeeze_at_angle, squeeze_axis}; // Parameters double: a 2x2 rotation by alpha becomes the z-x rotation by\\n// 2 alpha, and squeezes become boosts of doubled rapidity. boost_z(eta) and\\n// boost_x(w) are defined with cosh(2 eta) / cosh(2 w) entries, absorbing the\\n// doubling into their parameterization.\\nlet alpha = 0.4;\\nassert!(lift(&rotation(alpha)).unwrap().distance(&rot_zx(2.0 * alpha)) < 1e-13); let eta = 0.3;\\nassert!(lift(&squeeze_axis(eta)).unwrap().distance(&boost_z(eta)) < 1e-13); let w = -0.7;\\nlet diag = squeeze_at_angle(std::f64::consts::FRAC_PI_4, w);\\nassert!(lift(&diag).unwrap().distance(&boost_x(w)) < 1e-13); } Two structural facts come for free. The antisymmetric part of X (the y\\ncomponent) maps to det(M) times itself, so every lifted matrix fixes the y\\naxis. And the map is a homomorphism, lift(A B) = lift(A) lift(B), with\\nkernel {I, -I} — which is exactly why the 4x4 side sees doubled parameters. #![allow(unused)] fn main() {\\nuse optact::littlegroup::lift;\\nuse optact::optics::{rotation, squeeze_axis}; let a = rotation(0.9);\\nlet b = squeeze_axis(0.5);\\nlet lhs = lift(&(a * b)).unwrap();\\nlet rhs = lift(&a).unwrap() * lift(&b).unwrap();\\nassert!(lhs.distance(&rhs) < 1e-13);\\nassert!(lhs.lorentz_defect() < 1e-13); // L^T g L = g } lift insists on unimodular input ( |det - 1| <= 1e-9): the attenuation\\nscalar e^(-lambda z) must be stripped first, which is why TransferResult\\nhands it to you separately.","breadcrumbs":"Little groups and the 2x2 to 4x4 lift » The lift","id":"11","title":"The lift"},"12":{"body":"A particle moving along z has four-momentum (0, 0, p, E). Three cases: #![allow(unused)] fn main() {\\nuse optact::littlegroup::{invariance_residual, little_group_element, LittleGroupKind}; // Massive (E > p): boost to the rest frame, rotate, boost back.\\nlet massive = LittleGroupKind::massive(1.0, 0.75).unwrap();\\n// Space-like (E < p): boost to the zero-energy frame, x-boost, boost back.\\nlet spacelike = LittleGroupKind::spacelike(1.0, 0.6).unwrap();\\n// Light-like (E = p): no rest frame exists; the gauge matrix does the job.\\nlet lightlike = LittleGroupKind::lightlike(2.0).unwrap(); for kind in [massive, spacelike, lightlike] { let reference = kind.reference_vector(); for param in [-2.0, -0.5, 1.0] { let element = little_group_element(&kind, param); assert!(invariance_residual(&element, &reference) <= 1e-12); }\\n} } The required rapidities come from the kinematics: tanh(2 eta) = p / E for\\nboosting a rest-frame vector up to momentum p, tanh(2 eta) = E / p for\\nboosting a space-like vector down to zero energy. #![allow(unused)] fn main() {\\nuse optact::littlegroup::{boost_z, rapidity_massive};\\nuse optact::mat4::FourVector; // A 3-4-5 triangle: tanh(2 eta) = 0.6 gives cosh = 1.25, sinh = 0.75.\\nlet eta = rapidity_massive(0.75, 1.0);\\nlet moved = boost_z(eta).apply(&FourVector::new(0.0, 0.0, 0.0, 1.0));\\nassert!((moved.z - 0.75).abs() < 1e-13 && (moved.t - 1.25).abs() < 1e-13); }","breadcrumbs":"Little groups and the 2x2 to 4x4 lift » Three four-momenta, three little groups","id":"12","title":"Three four-momenta, three little groups"},"13":{"body":"The light-like case is the one with no 2x2-obvious form. Its little-group\\nelement is the gauge matrix [1, 0, -2g, 2g ]\\n[0, 1, 0, 0 ]\\n[2g, 0, 1-2g^2, 2g^2 ]\\n[2g, 0, -2g^2, 1+2g^2] and under the lift it is precisely the image of the unipotent shear [1, 2g; 0, 1] — the transpose of the parabolic medium’s transfer matrix [1, 0; 2 gamma z, 1]. The boundary regime of the optical medium and the\\nmassless little group are the same degenerate orbit, seen at 2x2 and 4x4\\nsize: #![allow(unused)] fn main() {\\nuse optact::littlegroup::{gauge_matrix, lift};\\nuse optact::Mat2; let g = 0.5;\\nlet shear = Mat2::new(1.0, 2.0 * g, 0.0, 1.0);\\nassert!(lift(&shear).unwrap().distance(&gauge_matrix(g)) < 1e-13); // One-parameter group: gauge parameters add.\\nlet composed = gauge_matrix(0.3) * gauge_matrix(0.7);\\nassert!(composed.distance(&gauge_matrix(1.0)) < 1e-12); } So the dictionary reads: elliptic medium ↔ massive particle (rotation-like\\nlittle group), hyperbolic medium ↔ space-like momentum (boost-like little\\ngroup), parabolic medium ↔ massless particle (gauge transformations). An\\noptically active absorbing crystal, swept through its regimes, walks through\\nall three internal space-time symmetries.","breadcrumbs":"Little groups and the 2x2 to 4x4 lift » The gauge matrix and the parabolic medium","id":"13","title":"The gauge matrix and the parabolic medium"},"14":{"body":"The optact binary exposes the library as five subcommands. All flags are\\nlong-form. Attenuation is always supplied as the physical pair\\n( --mu1, --mu2); the split into (lambda, mu) is derived. Output is UTF-8\\non stdout — CSV with a header row and \\\\n line endings, or JSON — and is\\nbyte-deterministic: identical invocations produce identical bytes. Floats are\\nprinted with 17 significant digits, so every value round-trips exactly to the\\nf64 that produced it. Exit codes: 0 success, 2 usage or validation error, 1 internal\\nnumerical failure (e.g. an overflowing gain configuration). Errors are\\nmachine-readable JSON objects on stderr: {\\"error\\":\\"...\\"}.","breadcrumbs":"Command-line reference » Command-line reference","id":"14","title":"Command-line reference"},"15":{"body":"Regime classification with the derived decomposition parameters. $ optact classify --gamma 2 --mu1 0.1 --mu2 0.3\\n{\\"lambda\\":2.0000000000000001e-1,\\"mu\\":9.9999999999999992e-2,\\"regime\\":\\"elliptic\\",\\"k\\":1.9974984355438179e0,\\"eta\\":-2.5020864639245664e-2} k and eta are null in the parabolic regime.","breadcrumbs":"Command-line reference » classify","id":"15","title":"classify"},"16":{"body":"Closed-form transfer matrix at distance --z; with --n-steps N it also\\nruns the N-step microscopic product and reports the Frobenius distance\\nbetween the two. $ optact transfer --gamma 1 --mu1 0 --mu2 2 --z 0.5\\n{\\"z\\":5.0000000000000000e-1,...,\\"regime\\":\\"parabolic\\",...,\\"matrix\\":[[...]]}\\n$ optact transfer --gamma 2 --mu1 0.1 --mu2 0.3 --z 1 --n-steps 100000\\n{...,\\"product_matrix\\":[[...]],\\"frobenius_distance\\":1.05...e-6}","breadcrumbs":"Command-line reference » transfer","id":"16","title":"transfer"},"17":{"body":"Polarization trajectory: --samples evenly spaced depths from 0 to --z-max, each row the state and its summary. The initial state is built\\nfrom --amp-x --amp-y --phase-x --phase-y (default: linear-x). $ optact propagate --gamma 1 --mu1 0 --mu2 0 --z-max 1.5 --samples 4\\nz,ex_re,ex_im,ey_re,ey_im,intensity_x,intensity_y,intensity_total,azimuth,ellipticity\\n0.0000000000000000e0,1.0000000000000000e0,... CSV columns, in order: z, ex_re, ex_im, ey_re, ey_im, intensity_x, intensity_y, intensity_total, azimuth, ellipticity. --format json emits an\\narray of row objects with the same field names.","breadcrumbs":"Command-line reference » propagate","id":"17","title":"propagate"},"18":{"body":"Azimuth lies in (-pi/2, pi/2], the ellipticity angle in [-pi/4, pi/4]; both are global-phase invariant. Handedness: the state with equal amplitudes and the y component ahead by pi/2 ( --amp-x 0.7071 --amp-y 0.7071 --phase-y 1.5707963) has\\nellipticity +pi/4. A positive --gamma rotates azimuth counterclockwise with growing z.","breadcrumbs":"Command-line reference » Conventions","id":"18","title":"Conventions"},"19":{"body":"One row per squeeze rate mu on a linear grid, at fixed --gamma, --z,\\nand isotropic loss --lambda (default 0). This is the probe for the regime\\nboundary: matrix entries vary continuously across mu = gamma, with no\\nsingular e^(2 eta) factors anywhere. $ optact sweep --gamma 1 --mu-from 0.9 --mu-to 1.1 --steps 5 --z 1\\nmu,regime,m11,m12,m21,m22,det\\n9.0000000000000002e-1,elliptic,...\\n...\\n1.1000000000000001e0,hyperbolic,... With --lambda 0 the det column sits at 1 to machine precision.","breadcrumbs":"Command-line reference » sweep","id":"19","title":"sweep"},"2":{"body":"Everything in this crate is built from three real 2x2 generators: J = [0 -1; 1 0] rotation generator\\nK1 = [1 0; 0 -1] squeeze generator along the axes\\nK2 = [0 1; 1 0] squeeze generator at 45 degrees They close under commutation — every bracket lands back on the triple with\\ninteger coefficients — which is what makes the combined medium of the next\\nchapter solvable at all: #![allow(unused)] fn main() {\\nuse optact::mat2::{commutator, J, K1, K2};\\nuse optact::Mat2; assert_eq!(commutator(J, K1), K2.scale(2.0));\\nassert_eq!(commutator(J, K2), K1.scale(-2.0));\\nassert_eq!(commutator(K1, K2), J.scale(-2.0)); // Their powers collapse immediately, so Taylor series in them fold into\\n// sines, hyperbolic sines, or nothing at all:\\nassert_eq!(J * J, -Mat2::IDENTITY);\\nassert_eq!(K1 * K1, Mat2::IDENTITY);\\nassert_eq!(K2 * K2, Mat2::IDENTITY); } Exponentiating the generators gives the three families of one-parameter\\ntransfer matrices: #![allow(unused)] fn main() {\\nuse optact::optics::{rotation, squeeze_at_angle, squeeze_axis}; // exp(alpha J): rotation by alpha.\\nlet r = rotation(std::f64::consts::FRAC_PI_2);\\nassert!((r.a11.abs() < 1e-15) && (r.a21 - 1.0).abs() < 1e-15); // exp(beta K1): stretch x by e^beta, shrink y by e^-beta.\\nlet s = squeeze_axis(2.0f64.ln());\\nassert_eq!((s.a11, s.a22), (2.0, 0.5)); // A squeeze along an axis tilted by theta is the conjugated product\\n// rotation(theta) * squeeze_axis(w) * rotation(-theta). At 45 degrees it\\n// becomes the symmetric cosh/sinh matrix the medium\'s microscopic steps use.\\nlet s45 = squeeze_at_angle(std::f64::consts::FRAC_PI_4, 0.3);\\nassert!((s45.a11 - 0.3f64.cosh()).abs() < 1e-15);\\nassert!((s45.a12 - 0.3f64.sinh()).abs() < 1e-15); // All of them are unimodular: det = 1.\\nassert!((r.det() - 1.0).abs() < 1e-15);\\nassert!((s45.det() - 1.0).abs() < 1e-15); }","breadcrumbs":"Rotations, squeezes, and the series exponential » Rotations, squeezes, and the series exponential","id":"2","title":"Rotations, squeezes, and the series exponential"},"20":{"body":"Little-group element, reference four-vector, and the invariance residual |L v - v|. The kind is a nested subcommand with its own parameters: $ optact littlegroup massive --mass 1 --momentum 0.75 --theta 1.0\\n{\\"kind\\":\\"massive\\",\\"param\\":...,\\"reference\\":[...],\\"matrix\\":[[...]],\\"residual\\":3.1...e-16}\\n$ optact littlegroup spacelike --momentum 1 --energy 0.6 --boost 1.5\\n$ optact littlegroup lightlike --momentum 2 --gauge 0.5 spacelike requires energy < momentum; otherwise the command exits with\\ncode 2 and {\\"error\\":\\"not space-like: ...\\"} on stderr. --format csv flattens the report into one header plus one data row\\n( kind, param, ref_x..ref_t, m00..m33, residual).","breadcrumbs":"Command-line reference » littlegroup","id":"20","title":"littlegroup"},"3":{"body":"expm_series sums the Taylor series of exp(a) directly. It exists not for\\nspeed but as an oracle: it never looks at the structure of its argument, so\\nthe closed forms elsewhere can be checked against it without circularity. One\\nscaling-and-squaring round keeps the alternating series well-conditioned for\\narguments of norm ~10: #![allow(unused)] fn main() {\\nuse optact::mat2::{expm_series, J, SERIES_MAX_TERMS, SERIES_TOL};\\nuse optact::optics::rotation; let alpha = 7.3;\\nlet series = expm_series(&J.scale(alpha), SERIES_TOL, SERIES_MAX_TERMS).unwrap();\\nassert!(series.distance(&rotation(alpha)) < 1e-12); } For a nilpotent argument the series truncates exactly — there is nothing\\nbeyond the linear term, and the result is bit-exact: #![allow(unused)] fn main() {\\nuse optact::mat2::{expm_series, SERIES_MAX_TERMS, SERIES_TOL};\\nuse optact::Mat2; let shear_rate = Mat2::new(0.0, 0.0, 0.8, 0.0);\\nassert_eq!(shear_rate * shear_rate, Mat2::ZERO); let e = expm_series(&shear_rate, SERIES_TOL, SERIES_MAX_TERMS).unwrap();\\nassert_eq!(e, Mat2::IDENTITY + shear_rate); } That truncation is not a numerical curiosity; in the next chapter it is the\\ntransfer matrix of a medium whose rotary power and squeeze rate exactly\\nbalance.","breadcrumbs":"Rotations, squeezes, and the series exponential » The series exponential","id":"3","title":"The series exponential"},"4":{"body":"A physical medium is specified by three numbers: the rotary power gamma and\\nthe attenuation coefficients mu1, mu2 along x and y. The attenuation pair\\nsplits into an isotropic loss and a squeeze, lambda = (mu2 + mu1) / 2 overall loss, a scalar factor e^(-lambda z)\\nmu = (mu2 - mu1) / 2 squeeze rate, a genuine matrix effect #![allow(unused)] fn main() {\\nuse optact::medium::{decompose_attenuation, MediumParams}; let params = MediumParams::new(2.0, 0.1, 0.3);\\nlet (lambda, mu) = decompose_attenuation(0.1, 0.3);\\nassert_eq!((lambda, mu), (params.lambda(), params.mu()));\\nassert!((lambda - 0.2).abs() < 1e-15 && (mu - 0.1).abs() < 1e-15); } Over a microscopic step h = z/N the medium applies the 45-degree squeeze S(mu h) after the rotation R(gamma h), with the scalar e^(-lambda h) in\\nfront. Accumulating N of these and letting N grow collapses the product into\\na single exponential of the step-independent generator G = [0, -(gamma - mu); gamma + mu, 0],\\nM(gamma, mu, z) = e^(-lambda z) exp(G z). G is the sum gamma J + mu K2 of two non-commuting generators, and it is\\nnot normal, so there is no unitary diagonalization to lean on. What saves the\\nday is G^2 = -(gamma^2 - mu^2) I: every even power is a multiple of the\\nidentity. Writing delta = gamma^2 - mu^2, the whole Taylor series folds into exp(G z) = [c, -(gamma - mu) s; (gamma + mu) s, c] with c = cos(k z), s = sin(k z)/k, k = sqrt(delta) when delta > 0, and\\ntheir hyperbolic counterparts when delta < 0. The two branches meet at delta = 0 where c = 1, s = z.","breadcrumbs":"The attenuated rotator » The attenuated rotator","id":"4","title":"The attenuated rotator"},"5":{"body":"The sign of delta is a real physical distinction: #![allow(unused)] fn main() {\\nuse optact::medium::{classify, Regime, CLASSIFY_REL_TOL}; // Rotation wins: oscillatory, polarization keeps turning.\\nassert!(matches!(classify(2.0, 1.0, CLASSIFY_REL_TOL), Regime::Elliptic { .. })); // Squeeze wins: one field direction grows exponentially relative to the other.\\nassert!(matches!(classify(1.0, 2.0, CLASSIFY_REL_TOL), Regime::Hyperbolic { .. })); // Exact balance: the generator is nilpotent and the transfer is a shear.\\nassert!(matches!(classify(1.5, 1.5, CLASSIFY_REL_TOL), Regime::Parabolic { .. })); } In the elliptic and hyperbolic regimes the generator also factors through a\\nz-independent squeeze B(eta) = diag(e^eta, e^-eta): G = k B(eta) J B(-eta) (elliptic), with k = sqrt(gamma^2 - mu^2), e^(2 eta) = sqrt((gamma - mu) / (gamma + mu)). classify reports (k, eta); the sign of eta is pinned by requiring the\\nfactored form to reproduce exp(G z) itself: #![allow(unused)] fn main() {\\nuse optact::mat2::{expm_series, SERIES_MAX_TERMS, SERIES_TOL};\\nuse optact::medium::{classify, generator, Regime};\\nuse optact::optics::{rotation, squeeze_axis}; let (k, eta) = match classify(5.0, 3.0, 1e-12) { Regime::Elliptic { k, eta } => (k, eta), _ => unreachable!(),\\n};\\nassert_eq!(k, 4.0);\\nassert!(((2.0 * eta).exp() - 0.5).abs() < 1e-15); let z = 0.2;\\nlet factored = squeeze_axis(eta) * rotation(k * z) * squeeze_axis(-eta);\\nlet series = expm_series(&generator(5.0, 3.0).scale(z), SERIES_TOL, SERIES_MAX_TERMS).unwrap();\\nassert!(factored.distance(&series) < 1e-12); } The e^(2 eta) factors blow up as mu -> gamma, which is why transfer_closed never uses the factored form: it evaluates the unified (c, s) expression above, whose kernels are even functions of k z and pass\\nsmoothly through the boundary.","breadcrumbs":"The attenuated rotator » Three regimes","id":"5","title":"Three regimes"},"6":{"body":"transfer_product is the ground truth: the literal N-fold product of\\nmicroscopic steps. The closed form must be its large-N limit, and the\\ndistance between them shrinks as O(1/N): #![allow(unused)] fn main() {\\nuse optact::medium::{transfer_closed, transfer_product, MediumParams}; let params = MediumParams::new(2.0, 0.1, 0.3);\\nlet closed = transfer_closed(&params, 1.0).matrix; let d4 = transfer_product(&params, 1.0, 10_000).distance(&closed);\\nlet d5 = transfer_product(&params, 1.0, 100_000).distance(&closed);\\nassert!(d4 < 1e-3);\\nassert!(d5 < 1e-4);\\nassert!(d5 < d4 / 5.0); // first-order convergence // At exact balance the closed form is the nilpotent shear, exactly.\\nlet balanced = MediumParams::from_isotropic_and_squeeze(1.0, 0.0, 1.0);\\nlet m = transfer_closed(&balanced, 0.5).matrix;\\nassert_eq!((m.a11, m.a12, m.a22), (1.0, 0.0, 1.0));\\nassert!((m.a21 - 1.0).abs() < 1e-15); } Two bookkeeping notes. MediumParams accepts negative attenuation\\ncoefficients — that is gain, and it is how a lossless pure squeeze\\n( lambda = 0, mu != 0) is expressed, via MediumParams::from_isotropic_and_squeeze. And TransferResult carries the\\nscalar lambda_factor = e^(-lambda z) separately, because the 4x4 lift in a\\nlater chapter wants the unimodular part alone.","breadcrumbs":"The attenuated rotator » Closed form against the defining product","id":"6","title":"Closed form against the defining product"},"7":{"body":"A fully polarized wave is a pair of complex amplitudes (ex, ey). The crate\\nconstructs them from amplitudes and phases and reads them out as intensities\\nplus two angles: the azimuth of the polarization ellipse (in (-pi/2, pi/2])\\nand its ellipticity angle (in [-pi/4, pi/4], sign = handedness). #![allow(unused)] fn main() {\\nuse optact::optics::{summarize, JonesState}; let linear_x = JonesState::from_amp_phase(1.0, 0.0, 0.0, 0.0);\\nlet s = summarize(&linear_x);\\nassert_eq!((s.azimuth, s.ellipticity_angle), (0.0, 0.0)); // Equal amplitudes, y ahead by pi/2: circular light with ellipticity +pi/4.\\nlet inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;\\nlet circular = JonesState::from_amp_phase(inv_sqrt2, inv_sqrt2, 0.0, std::f64::consts::FRAC_PI_2);\\nlet s = summarize(&circular);\\nassert!((s.ellipticity_angle - std::f64::consts::FRAC_PI_4).abs() < 1e-12); } The summaries are invariant under a global phase — which is why the optical\\ncarrier e^(i(k z - omega t)) is carried only as metadata ( CarrierPhase)\\nand never enters the transfer algebra: #![allow(unused)] fn main() {\\nuse optact::optics::{summarize, CarrierPhase, JonesState}; let state = JonesState::from_amp_phase(0.9, 0.45, 0.2, 1.3);\\nlet carrier = CarrierPhase { wavenumber: 7.0, angular_frequency: 3.0 }; let f = carrier.factor(2.0, 0.5); // unit modulus\\nlet shifted = JonesState::new(state.ex * f, state.ey * f);\\nassert!((summarize(&state).azimuth - summarize(&shifted).azimuth).abs() < 1e-12); }","breadcrumbs":"Polarization states and trajectories » Polarization states and trajectories","id":"7","title":"Polarization states and trajectories"},"8":{"body":"Every transfer matrix in this crate is real, so it acts on the real and\\nimaginary parts of the components identically. Rotating linear-x light by a\\nquarter turn gives linear-y light; a squeeze rescales the amplitudes: #![allow(unused)] fn main() {\\nuse optact::optics::{propagate, rotation, squeeze_axis, JonesState}; let y = propagate(&JonesState::linear_x(), &rotation(std::f64::consts::FRAC_PI_2));\\nassert!(y.ex.norm() < 1e-15 && (y.ey.norm() - 1.0).abs() < 1e-15); let stretched = propagate(&JonesState::linear_x(), &squeeze_axis(0.5));\\nassert!((stretched.ex.norm() - 0.5f64.exp()).abs() < 1e-15); }","breadcrumbs":"Polarization states and trajectories » Propagation","id":"8","title":"Propagation"},"9":{"body":"trajectory samples the state at evenly spaced depths, evaluating the\\nclosed-form transfer at each z (not by chaining steps, so there is no error\\naccumulation along the way). In a pure rotator the azimuth advances linearly;\\nwith isotropic loss on top, the summary angles freeze and only the intensity\\ndecays: #![allow(unused)] fn main() {\\nuse optact::medium::MediumParams;\\nuse optact::optics::{trajectory, JonesState}; let rotator = MediumParams::new(1.0, 0.0, 0.0);\\nfor p in trajectory(&rotator, &JonesState::linear_x(), 1.4, 8) { assert!((p.summary.azimuth - p.z).abs() < 1e-12); assert!((p.summary.intensity_total - 1.0).abs() < 1e-12);\\n} let absorber = MediumParams::new(0.0, 0.4, 0.4);\\nfor p in trajectory(&absorber, &JonesState::linear_x(), 2.0, 5) { let expected = (-2.0 * 0.4 * p.z).exp(); assert!((p.summary.intensity_total - expected).abs() < 1e-12);\\n} } In a hyperbolic medium ( |mu| > |gamma|) the squeeze wins: whatever state\\ngoes in, the polarization collapses toward the squeeze’s growing axis while\\nthe total intensity follows the interplay of lambda and the growth rate k. The optact propagate subcommand emits these trajectories as CSV rows\\nfor plotting.","breadcrumbs":"Polarization states and trajectories » Trajectories","id":"9","title":"Trajectories"}},"docInfo":{"0":{"body":200,"breadcrumbs":2,"title":1},"1":{"body":60,"breadcrumbs":3,"title":2},"10":{"body":28,"breadcrumbs":10,"title":5},"11":{"body":182,"breadcrumbs":6,"title":1},"12":{"body":134,"breadcrumbs":11,"title":6},"13":{"body":130,"breadcrumbs":9,"title":4},"14":{"body":72,"breadcrumbs":6,"title":3},"15":{"body":23,"breadcrumbs":4,"title":1},"16":{"body":46,"breadcrumbs":4,"title":1},"17":{"body":63,"breadcrumbs":4,"title":1},"18":{"body":38,"breadcrumbs":4,"title":1},"19":{"body":54,"breadcrumbs":4,"title":1},"2":{"body":174,"breadcrumbs":8,"title":4},"20":{"body":68,"breadcrumbs":4,"title":1},"3":{"body":102,"breadcrumbs":6,"title":2},"4":{"body":178,"breadcrumbs":4,"title":2},"5":{"body":166,"breadcrumbs":4,"title":2},"6":{"body":110,"breadcrumbs":7,"title":5},"7":{"body":118,"breadcrumbs":6,"title":3},"8":{"body":48,"breadcrumbs":4,"title":1},"9":{"body":104,"breadcrumbs":4,"title":1}},"length":21},"lang":"English"}}'));