//! Reference values of J_nu(x) computed with 40-digit arbitrary precision arithmetic.

pub const BESSEL_J_TABLE: &[(f64, f64, f64)] = &[
    (-1.3, 0.1, -11.448926346417152331),
    (-1.3, 1.0, -0.96267128684022313517),
    (-1.3, 5.0, 0.3594458457784199181),
    (-1.3, 20.0, -0.13674713797853739996),
    (-1.3, 24.99, 0.066299592822529341094),
    (-1.3, 25.01, 0.063358724999233568466),
    (-1.3, 37.3, 0.083580339337355433425),
    (-1.3, 50.0, 0.060447149555610316836),
    (-1.3, 99.5, 0.077831758674039163165),
    (-1.3, 100.0, 0.059305396835128867838),
    (-1.3, 150.0, 0.058231030190500171403),
    (-1.3, 200.0, 0.055313728161275947067),
    (-0.5, 0.1, 2.5105273689585092433),
    (-0.5, 1.0, 0.43109886801837607952),
    (-0.5, 5.0, 0.10121770918510839957),
    (-0.5, 20.0, 0.07280690478506184855),
    (-0.5, 24.99, 0.15798557641341313416),
    (-0.5, 25.01, 0.15834470899418267795),
    (-0.5, 37.3, 0.12037517042048052764),
    (-0.5, 50.0, 0.10888475635053954314),
    (-0.5, 99.5, 0.041113491569648074921),
    (-0.5, 100.0, 0.068803091468728083746),
    (-0.5, 150.0, 0.045554093399396885302),
    (-0.5, 200.0, 0.027486621147180229855),
    (0.0, 0.1, 0.997501562066040032),
    (0.0, 1.0, 0.76519768655796655145),
    (0.0, 5.0, -0.17759677131433830435),
    (0.0, 20.0, 0.16702466434058315473),
    (0.0, 24.99, 0.095008236967548123678),
    (0.0, 25.01, 0.097515201593195707371),
    (0.0, 37.3, 0.048811957363259748132),
    (0.0, 50.0, 0.055812327669251815005),
    (0.0, 99.5, -0.019543066407440783557),
    (0.0, 100.0, 0.019985850304223122424),
    (0.0, 150.0, -0.00077409037539429124695),
    (0.0, 200.0, -0.015437439930565091592),
    (0.5, 0.1, 0.25189294032600095267),
    (0.5, 1.0, 0.67139670714180309042),
    (0.5, 5.0, -0.34216798479816180976),
    (0.5, 20.0, 0.16288076385502987091),
    (0.5, 24.99, -0.022705473621567071938),
    (0.5, 25.01, -0.019533616783136254083),
    (0.5, 37.3, -0.050767830022665734662),
    (0.5, 50.0, -0.029605831888924612568),
    (0.5, 99.5, -0.068613916066373477633),
    (0.5, 100.0, -0.040402132716252123744),
    (0.5, 150.0, -0.046572055895600107672),
    (0.5, 200.0, -0.049270523842854474976),
    (1.7, 0.1, 0.0039719764552031069789),
    (1.7, 1.0, 0.18141766505664452857),
    (1.7, 5.0, -0.085089767345250405927),
    (1.7, 20.0, -0.11077234771958566271),
    (1.7, 24.99, -0.1469083447455909219),
    (1.7, 25.01, -0.14807333549705082536),
    (1.7, 37.3, -0.10180573886384653723),
    (1.7, 50.0, -0.096030564062553753404),
    (1.7, 99.5, -0.018932265089086476315),
    (1.7, 100.0, -0.053737427353648776833),
    (1.7, 150.0, -0.029446343992932028123),
    (1.7, 200.0, -0.011281173193421618664),
    (3.0, 0.1, 0.000020820315754756264895),
    (3.0, 1.0, 0.019563353982668405919),
    (3.0, 5.0, 0.36483123061366699446),
    (3.0, 20.0, -0.098901394560449675613),
    (3.0, 24.99, 0.10953092005226947551),
    (3.0, 25.01, 0.10714504104029310057),
    (3.0, 37.3, 0.11460422865291980409),
    (3.0, 50.0, 0.092734804061634432021),
    (3.0, 99.5, 0.078386092598695916412),
    (3.0, 100.0, 0.076284201720331943409),
    (3.0, 150.0, 0.065142643342881793899),
    (3.0, 200.0, 0.054602426073353048898),
    (10.5, 0.1, 1.8346985880035504516e-21),
    (10.5, 1.0, 5.6781874776346222993e-11),
    (10.5, 5.0, 0.00072675268974148710633),
    (10.5, 20.0, 0.14161199228473080809),
    (10.5, 24.99, -0.14542542700792623264),
    (10.5, 25.01, -0.1438223505853573836),
    (10.5, 37.3, -0.1179145508451140573),
    (10.5, 50.0, -0.08484972094355338143),
    (10.5, 99.5, 0.036877804942093185661),
    (10.5, 100.0, -0.0015611238546507794568),
    (10.5, 150.0, 0.02716978842499365668),
    (10.5, 200.0, 0.039980424748481876365),
    (20.0, 0.1, 3.9194377208586220087e-45),
    (20.0, 1.0, 3.8735030085246577189e-25),
    (20.0, 5.0, 2.7703300521289416874e-11),
    (20.0, 20.0, 0.16474777377532653234),
    (20.0, 24.99, 0.053223638045120521552),
    (20.0, 25.01, 0.050763080753451446721),
    (20.0, 37.3, -0.055404969259965357074),
    (20.0, 50.0, -0.11670435275957973734),
    (20.0, 99.5, 0.079219398226501795447),
    (20.0, 100.0, 0.062217458498338753141),
    (20.0, 150.0, 0.063447240953861972933),
    (20.0, 200.0, 0.037450938710860043346),
    (45.5, 0.1, 7.8541862551140185343e-117),
    (45.5, 1.0, 2.4705263846670048821e-71),
    (45.5, 5.0, 1.3797612184117609386e-39),
    (45.5, 20.0, 4.3203311231474141621e-13),
    (45.5, 24.99, 3.0083238004156331325e-9),
    (45.5, 25.01, 3.1017379244839451794e-9),
    (45.5, 37.3, 0.0021273609180455170766),
    (45.5, 50.0, 0.1558423420385698499),
    (45.5, 99.5, 0.083996108729319781918),
    (45.5, 100.0, 0.070522229026789325914),
    (45.5, 150.0, -0.066213912901267645824),
    (45.5, 200.0, 0.031175205499500312245),
    (60.5, 0.1, 2.9903207808839151256e-162),
    (60.5, 1.0, 9.4182442916016968553e-102),
    (60.5, 5.0, 1.6567200111169337257e-59),
    (60.5, 20.0, 9.3835018361402839769e-24),
    (60.5, 24.99, 2.5965983887126535726e-18),
    (60.5, 25.01, 2.7138201764227725938e-18),
    (60.5, 37.3, 3.0258816072342267031e-9),
    (60.5, 50.0, 0.00075585342005478930004),
    (60.5, 99.5, -0.067309718073064716196),
    (60.5, 100.0, -0.038908594115242491337),
    (60.5, 150.0, -0.056901454398310687025),
    (60.5, 200.0, 0.055109050340246829143),
    (102.5, 0.1, 4.5247875827813117976e-297),
    (102.5, 1.0, 1.427445886943615612e-194),
    (102.5, 5.0, 5.9401995600492254588e-123),
    (102.5, 20.0, 1.229167719690239199e-61),
    (102.5, 24.99, 5.8440732519396564952e-52),
    (102.5, 25.01, 6.3279519880953115349e-52),
    (102.5, 37.3, 5.9121315954426919577e-35),
    (102.5, 50.0, 3.9374929364728620113e-23),
    (102.5, 99.5, 0.045247955114610410438),
    (102.5, 100.0, 0.052370521031316412608),
    (102.5, 150.0, 0.072857881252635815423),
    (102.5, 200.0, -0.039046203410159207513),
    (120.0, 0.1, 1.12459901833077448e-355),
    (120.0, 1.0, 1.1223010335163907724e-235),
    (120.0, 5.0, 8.0347038861623131248e-152),
    (120.0, 20.0, 6.5231651116456876936e-80),
    (120.0, 24.99, 1.6580067153457931888e-68),
    (120.0, 25.01, 1.8212583364511303747e-68),
    (120.0, 37.3, 2.4687177357972497246e-48),
    (120.0, 50.0, 4.3030265217676978838e-34),
    (120.0, 99.5, 8.1709468799170261398e-6),
    (120.0, 100.0, 0.000011476221795664936051),
    (120.0, 150.0, 0.07045550047386770271),
    (120.0, 200.0, -0.043319105582693592968),
];
